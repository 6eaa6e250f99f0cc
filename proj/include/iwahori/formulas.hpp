#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwahori/hecke.hpp"

namespace iwahori {

enum class Formula {
  TheoremLhs,
  TheoremRhs,
  WeylChar,
  DemazureChar,
  CasselmanShalika,
  Macdonald,
  Shalika,
  BesselValue,
  IwahoriImage,
};

/// Dashed names as used on the command line, e.g. "theorem-lhs".
const char* to_string(Formula f);
Formula parse_formula(const std::string& name);
std::vector<Formula> all_formulas();

/// pi^{-rho_eps} sum_w T'_w pi^{lambda + 2 rho_eps}, T' the conjugated generators.
GroupRingElem theorem_lhs(const WeylDatum& d, const HeckeCharacter& eps, const Coweight& lambda);

/// (-1)^N pi^{-rho_eps} D_(-1) A(pi^{lambda + 2 rho_eps - rho} D_(q)) / (pi^rho prod(1 - pi^{-a})),
/// N = l(w_0).  The alternator image is divided by the Weyl denominator first.
GroupRingElem theorem_rhs(const WeylDatum& d, const HeckeCharacter& eps, const Coweight& lambda,
                          OmegaOptions opts = {});

/// A(pi^{lambda + rho}) / A(pi^rho).  Throws NonDominant.
GroupRingElem weyl_character(const WeylDatum& d, const Coweight& lambda);
/// Demazure operators along w_0 applied to pi^{w_0 lambda}.  Throws NonDominant.
GroupRingElem demazure_character(const WeylDatum& d, const Coweight& lambda);

struct CasselmanShalikaReport {
  /// q^N pi^rho prod(1 - q^-1 pi^{-a}) chi_lambda
  GroupRingElem closed_form;
  /// theorem_lhs(sign, lambda)
  GroupRingElem theorem_value;
  /// theorem_value = unit * closed_form with unit in {1, -1}; 0 if neither.
  int unit = 0;
  CoeffQ measure;
};
CasselmanShalikaReport casselman_shalika(const WeylDatum& d, const Coweight& lambda);

/// sum_w w(pi^lambda prod (1 - q pi^a) / (1 - pi^a)), summed as fractions and
/// then cleared.  Throws NonDominant.
GroupRingElem macdonald(const WeylDatum& d, const Coweight& lambda);

struct ShalikaForms {
  /// theorem_rhs for the character that is -1 on short simple roots.
  GroupRingElem theorem_form;
  /// (-1)^N q^{#long} pi^{-rho_eps} D_(-1) A(pi^{lambda+rho} prod_long (1 - q^-1 pi^{-a})) / Delta
  GroupRingElem rewritten_form;
  /// theorem_lhs for the same character, as a third reference.
  GroupRingElem lhs;
  bool forms_agree() const { return theorem_form == rewritten_form; }
};
/// Type B only (WrongFamily otherwise); lambda dominant (NonDominant).
ShalikaForms shalika(const WeylDatum& d, const Coweight& lambda);

struct BesselReport {
  /// theorem_lhs(neg-long, 0)
  GroupRingElem theorem_value;
  /// pi^{-rho_eps} prod_long (1 - q^-1 pi^a)
  GroupRingElem quoted_product;
  /// theorem_value / quoted_product when it exists in the group ring.
  std::optional<GroupRingElem> ratio;
  /// The same comparison against pi^{rho_eps} prod_long (1 - q^-1 pi^{-a}),
  /// i.e. the quoted product with every exponent negated.
  GroupRingElem inverted_product;
  std::optional<GroupRingElem> inverted_ratio;

  bool ratio_is_unit_monomial() const { return ratio && ratio->is_single_term(); }
};
/// Type B only (WrongFamily otherwise).
BesselReport bessel_report(const WeylDatum& d);
/// The ratio as a single monomial; throws RatioNotMonomial otherwise.
GroupRingElem bessel_unit(const WeylDatum& d);

/// q^{sum_{a > 0} <a, lambda>}.  Throws NonDominant.
CoeffQ coset_measure(const RootSystem& rs, const Coweight& lambda);

struct IwahoriImage {
  /// T_w pi^{lambda + rho_eps}
  GroupRingElem value;
  CoeffQ measure;
};
/// Throws NonDominant.
IwahoriImage iwahori_image(const WeylDatum& d, const HeckeCharacter& eps, std::size_t w,
                           const Coweight& lambda);

/// Dominant coweights with coordinate sum at most height, in lex order.
std::vector<Coweight> dominant_up_to_height(std::size_t rank, int height);

}  // namespace iwahori
