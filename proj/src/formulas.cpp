#include "iwahori/formulas.hpp"

#include <array>
#include <utility>

#include "iwahori/errors.hpp"
#include "iwahori/rational.hpp"

namespace iwahori {

namespace {

constexpr std::array<std::pair<Formula, const char*>, 9> kNames{{
    {Formula::TheoremLhs, "theorem-lhs"},
    {Formula::TheoremRhs, "theorem-rhs"},
    {Formula::WeylChar, "weyl-char"},
    {Formula::DemazureChar, "demazure-char"},
    {Formula::CasselmanShalika, "casselman-shalika"},
    {Formula::Macdonald, "macdonald"},
    {Formula::Shalika, "shalika"},
    {Formula::BesselValue, "bessel-value"},
    {Formula::IwahoriImage, "iwahori-image"},
}};

void require_dominant(const Coweight& lambda, const char* what) {
  if (!lambda.is_dominant()) {
    throw NonDominant(std::string(what) + " requires a dominant coweight, got " + lambda.to_string());
  }
}

void require_family_b(const WeylDatum& d, const char* what) {
  if (d.type().family != 'B') {
    throw WrongFamily(std::string(what) + " is defined for type B only, got " + d.type().to_string());
  }
}

GroupRingElem signed_by_longest(const WeylDatum& d, GroupRingElem f, bool apply) {
  if (apply && d.longest_length() % 2 == 1) return -f;
  return f;
}

}  // namespace

const char* to_string(Formula f) {
  for (const auto& [k, name] : kNames)
    if (k == f) return name;
  return "?";
}

Formula parse_formula(const std::string& name) {
  for (const auto& [k, n] : kNames)
    if (name == n) return k;
  throw ParseError("unknown formula '" + name + "'");
}

std::vector<Formula> all_formulas() {
  std::vector<Formula> out;
  for (const auto& [k, name] : kNames) out.push_back(k);
  return out;
}

GroupRingElem theorem_lhs(const WeylDatum& d, const HeckeCharacter& eps, const Coweight& lambda) {
  const Coweight& r = eps.rho_eps();
  GroupRingElem start = GroupRingElem::monomial(lambda + 2 * r);
  return sum_fraktur(d.W(), eps, start).times_monomial(-r);
}

GroupRingElem theorem_rhs(const WeylDatum& d, const HeckeCharacter& eps, const Coweight& lambda,
                          OmegaOptions opts) {
  const Coweight& r = eps.rho_eps();
  GroupRingElem inner = d_q(d.rs(), eps).times_monomial(lambda + 2 * r - d.rho());
  GroupRingElem quotient = d.divide_by_weyl_denominator(alternator(d.W(), inner));
  GroupRingElem value = (d_minus(d.rs(), eps) * quotient).times_monomial(-r);
  return signed_by_longest(d, std::move(value), opts.sign_correction);
}

GroupRingElem weyl_character(const WeylDatum& d, const Coweight& lambda) {
  require_dominant(lambda, "weyl-char");
  return d.divide_by_weyl_denominator(alternator(d.W(), GroupRingElem::monomial(lambda + d.rho())));
}

GroupRingElem demazure_character(const WeylDatum& d, const Coweight& lambda) {
  require_dominant(lambda, "demazure-char");
  const Coweight start = d.W().act(d.W().longest(), lambda);
  return demazure_longest(d.W(), GroupRingElem::monomial(start));
}

CasselmanShalikaReport casselman_shalika(const WeylDatum& d, const Coweight& lambda) {
  require_dominant(lambda, "casselman-shalika");
  GroupRingElem closed = GroupRingElem::monomial(d.rho(), 1, d.longest_length());
  for (const auto& root : d.rs().positive_roots()) closed = closed * one_minus(-root.coroot, 1, -1);
  closed = closed * weyl_character(d, lambda);

  CasselmanShalikaReport rep;
  rep.theorem_value = theorem_lhs(d, HeckeCharacter::by_name(d.rs(), "sign"), lambda);
  if (rep.theorem_value == closed) {
    rep.unit = 1;
  } else if (rep.theorem_value == -closed) {
    rep.unit = -1;
  }
  rep.closed_form = std::move(closed);
  rep.measure = coset_measure(d.rs(), lambda);
  return rep;
}

GroupRingElem macdonald(const WeylDatum& d, const Coweight& lambda) {
  require_dominant(lambda, "macdonald");
  const std::size_t n = d.rank();
  GroupRingElem num = GroupRingElem::monomial(lambda);
  GroupRingElem den = GroupRingElem::one(n);
  for (const auto& root : d.rs().positive_roots()) {
    num = num * one_minus(root.coroot, 1, 1);
    den = den * one_minus(root.coroot);
  }
  RationalElem sum(GroupRingElem::zero(n));
  for (std::size_t w = 0; w < d.W().size(); ++w) {
    sum += RationalElem(weyl_act(d.W(), w, num), weyl_act(d.W(), w, den));
  }
  return sum.clear();
}

ShalikaForms shalika(const WeylDatum& d, const Coweight& lambda) {
  require_family_b(d, "shalika");
  require_dominant(lambda, "shalika");
  const HeckeCharacter eps = HeckeCharacter::by_name(d.rs(), "neg-short");
  const Coweight& r = eps.rho_eps();

  ShalikaForms out;
  out.theorem_form = theorem_rhs(d, eps, lambda);
  out.lhs = theorem_lhs(d, eps, lambda);

  int num_long = 0;
  GroupRingElem inner = GroupRingElem::monomial(lambda + d.rho());
  for (const auto& root : d.rs().positive_roots()) {
    if (root.length != LengthClass::Long) continue;
    ++num_long;
    inner = inner * one_minus(-root.coroot, 1, -1);
  }
  GroupRingElem quotient = d.divide_by_weyl_denominator(alternator(d.W(), inner));
  GroupRingElem value = (d_minus(d.rs(), eps) * quotient).times_monomial(-r, 1, num_long);
  out.rewritten_form = signed_by_longest(d, std::move(value), true);
  return out;
}

BesselReport bessel_report(const WeylDatum& d) {
  require_family_b(d, "bessel-value");
  const HeckeCharacter eps = HeckeCharacter::by_name(d.rs(), "neg-long");
  const Coweight& r = eps.rho_eps();
  const std::size_t n = d.rank();

  BesselReport rep;
  rep.theorem_value = theorem_lhs(d, eps, Coweight::zero(n));
  rep.quoted_product = GroupRingElem::monomial(-r);
  rep.inverted_product = GroupRingElem::monomial(r);
  const auto& roots = d.rs().positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (!eps.minus_roots()[k]) continue;
    rep.quoted_product = rep.quoted_product * one_minus(roots[k].coroot, 1, -1);
    rep.inverted_product = rep.inverted_product * one_minus(-roots[k].coroot, 1, -1);
  }
  rep.ratio = try_exact_div(rep.theorem_value, rep.quoted_product);
  rep.inverted_ratio = try_exact_div(rep.theorem_value, rep.inverted_product);
  return rep;
}

GroupRingElem bessel_unit(const WeylDatum& d) {
  BesselReport rep = bessel_report(d);
  if (!rep.ratio_is_unit_monomial()) {
    std::string detail = rep.ratio ? "ratio " + rep.ratio->to_string() : "no quotient in the group ring";
    throw RatioNotMonomial("bessel value for " + d.type().to_string() +
                           " is not a unit monomial multiple of the quoted product: " + detail);
  }
  return *rep.ratio;
}

CoeffQ coset_measure(const RootSystem& rs, const Coweight& lambda) {
  require_dominant(lambda, "coset measure");
  int exponent = 0;
  for (const auto& root : rs.positive_roots()) exponent += rs.pairing(root.simple_coeffs, lambda);
  return CoeffQ::q_power(exponent);
}

IwahoriImage iwahori_image(const WeylDatum& d, const HeckeCharacter& eps, std::size_t w,
                           const Coweight& lambda) {
  require_dominant(lambda, "iwahori-image");
  IwahoriImage out;
  out.value = t_word(d.W(), eps, d.W()[w].reduced_word,
                     GroupRingElem::monomial(lambda + eps.rho_eps()));
  out.measure = coset_measure(d.rs(), lambda);
  return out;
}

std::vector<Coweight> dominant_up_to_height(std::size_t rank, int height) {
  std::vector<Coweight> out;
  Coweight mu = Coweight::zero(rank);
  // Odometer over [0, height]^rank, pruned by the coordinate sum.
  while (true) {
    if (mu.height() <= height) out.push_back(mu);
    std::size_t j = rank;
    while (j > 0) {
      --j;
      if (mu[j] < height) {
        ++mu[j];
        break;
      }
      mu[j] = 0;
      if (j == 0) return out;
    }
    if (rank == 0) return out;
  }
}

}  // namespace iwahori
