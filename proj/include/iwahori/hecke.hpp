#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iwahori/group_ring.hpp"
#include "iwahori/rational.hpp"
#include "iwahori/root_system.hpp"

namespace iwahori {

/// A root system together with its enumerated Weyl group and the handful of
/// derived elements every formula needs.  Immutable and shared by pointer,
/// since the group refers back to the root system.
class WeylDatum {
 public:
  static std::shared_ptr<const WeylDatum> make(const CartanType& t,
                                               std::size_t max_order = kDefaultMaxWeylOrder);
  WeylDatum(const WeylDatum&) = delete;
  WeylDatum& operator=(const WeylDatum&) = delete;

  const RootSystem& rs() const { return rs_; }
  const WeylGroup& W() const { return W_; }
  std::size_t rank() const { return rs_.rank(); }
  const CartanType& type() const { return rs_.type(); }

  const Coweight& rho() const { return rho_; }
  /// Length of the longest element, equal to the number of positive roots.
  int longest_length() const { return W_[W_.longest()].length; }
  /// pi^rho * prod_{alpha > 0} (1 - pi^{-alpha^vee}); equals the alternator of pi^rho.
  const GroupRingElem& weyl_denominator() const { return weyl_denominator_; }

  /// f / weyl_denominator(), dividing one binomial factor at a time.
  /// Throws NotDivisible if f is not a multiple.
  GroupRingElem divide_by_weyl_denominator(const GroupRingElem& f) const;

 private:
  explicit WeylDatum(RootSystem rs, std::size_t max_order);

  RootSystem rs_;
  WeylGroup W_;
  Coweight rho_;
  GroupRingElem weyl_denominator_;
};

using DatumPtr = std::shared_ptr<const WeylDatum>;

/// Linear character of the finite Hecke algebra: T_{s_i} acts on the one
/// dimensional space by value(i), which is -1 or q for a genuine character.
/// The positive roots split into those of the same length as a simple root
/// with value -1 (the "minus" roots) and the rest.
class HeckeCharacter {
 public:
  /// All linear characters: {triv, sign} when simply laced, plus
  /// {neg-long, neg-short} for two root lengths.
  static std::vector<HeckeCharacter> all(const RootSystem& rs);
  /// "triv", "sign", "neg-long" or "neg-short".  Throws InvalidCharacter.
  static HeckeCharacter by_name(const RootSystem& rs, const std::string& name);
  /// Character given by which simple generators act by -1.  With validate,
  /// throws InvalidCharacter unless the values agree across every odd braid
  /// bond.  Unvalidated characters exist for negative controls only.
  static HeckeCharacter from_signs(const RootSystem& rs, std::string name,
                                   const std::vector<bool>& minus_one, bool validate = true);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return minus_one_.size(); }
  bool acts_by_minus_one(std::size_t i) const { return minus_one_[i]; }
  const CoeffQ& value(std::size_t i) const { return value_[i]; }
  /// Membership of each positive root in the minus class.
  const std::vector<bool>& minus_roots() const { return minus_roots_; }
  /// Half sum of the minus coroots.  Throws NonIntegralCoweight for broken
  /// partitions, which only unvalidated characters can produce.
  const Coweight& rho_eps() const;

  /// Copy whose generator i acts by an arbitrary scalar; the root partition
  /// is left unchanged.  Negative-control use only.
  HeckeCharacter with_value(std::size_t i, const CoeffQ& v) const;
  /// Copy with an explicitly chosen minus-root set.
  HeckeCharacter with_minus_roots(const RootSystem& rs, std::vector<bool> minus_roots) const;

 private:
  std::string name_;
  std::vector<bool> minus_one_;
  std::vector<CoeffQ> value_;
  std::vector<bool> minus_roots_;
  std::optional<Coweight> rho_eps_;
  std::string rho_error_;
};

std::vector<HeckeCharacter> characters(const RootSystem& rs);
Coweight rho_eps(const RootSystem& rs, const HeckeCharacter& eps);

/// D_(-1) = prod over minus roots of (1 - q pi^{alpha^vee}).
GroupRingElem d_minus(const RootSystem& rs, const HeckeCharacter& eps);
/// D_(q) = prod over the remaining positive roots of (1 - q pi^{alpha^vee}).
GroupRingElem d_q(const RootSystem& rs, const HeckeCharacter& eps);

// --- The induced module ----------------------------------------------------

/// T_{s_i} f = eps(T_{s_i}) f^{s_i} + (q - 1) (f - f^{s_i}) / (1 - pi^{-alpha_i^vee})
GroupRingElem t_act(const RootSystem& rs, const HeckeCharacter& eps, std::size_t i,
                    const GroupRingElem& f);
/// T_{i_1} ... T_{i_k} f for a reduced word; throws NonReducedWord.
GroupRingElem t_word(const WeylGroup& W, const HeckeCharacter& eps, std::span<const int> word,
                     const GroupRingElem& f);

/// Demazure operator (pi^{-a} - 1)^{-1} (pi^{-a} - s_i), a = alpha_i^vee.
GroupRingElem demazure(const RootSystem& rs, std::size_t i, const GroupRingElem& f);
GroupRingElem demazure_word(const WeylGroup& W, std::span<const int> word, const GroupRingElem& f);
/// Composition along the stored reduced word of w_0.
GroupRingElem demazure_longest(const WeylGroup& W, const GroupRingElem& f);

/// Conjugated generator pi^{rho_eps} T_{s_i} pi^{-rho_eps}.
GroupRingElem fraktur_t(const RootSystem& rs, const HeckeCharacter& eps, std::size_t i,
                        const GroupRingElem& f);
/// The same operator from its closed two-case formula, evaluated in the
/// fraction field and then cleared.  Independent route used by the tests.
GroupRingElem fraktur_t_closed_form(const RootSystem& rs, const HeckeCharacter& eps, std::size_t i,
                                    const GroupRingElem& f);
GroupRingElem fraktur_word(const WeylGroup& W, const HeckeCharacter& eps,
                           std::span<const int> word, const GroupRingElem& f);

/// Normalized intertwiner (1 - q^-1) pi^{a} f + q^-1 (1 - pi^{a}) T_{s_i} f.
GroupRingElem intertwiner_op(const RootSystem& rs, const HeckeCharacter& eps, std::size_t i,
                             const GroupRingElem& f);
/// c with intertwiner_op(f) = c * f^{s_i}: (1 - q^-1 pi^a) when T_{s_i}
/// acts by q, (pi^a - q^-1) when it acts by -1.
GroupRingElem intertwiner_constant(const RootSystem& rs, const HeckeCharacter& eps, std::size_t i);

/// Sum over W of the conjugated operators applied to f.  Each term is the
/// composition along the stored ShortLex word; since suffixes of those words
/// are again stored words, every prefix product is computed once.
GroupRingElem sum_fraktur(const WeylGroup& W, const HeckeCharacter& eps, const GroupRingElem& f);
/// Sum over W of T_w f, with the same sharing.
GroupRingElem sum_t(const WeylGroup& W, const HeckeCharacter& eps, const GroupRingElem& f);
/// Every T_w f, indexed by element.
std::vector<GroupRingElem> all_t(const WeylGroup& W, const HeckeCharacter& eps,
                                 const GroupRingElem& f);

/// Sum over W of (-1)^{l(w)} w(f).
GroupRingElem alternator(const WeylGroup& W, const GroupRingElem& f);

struct OmegaOptions {
  /// Include the global (-1)^{l(w_0)}.  Disabling it is a negative control.
  bool sign_correction = true;
};

/// Omega(f) = (-1)^{l(w_0)} pi^{-rho} prod(1 - pi^{-alpha^vee})^{-1} A(pi^{-rho} f).
/// Always lies in the group ring; returned as a fraction with denominator 1.
RationalElem omega_apply(const WeylDatum& d, const GroupRingElem& f, OmegaOptions opts = {});
GroupRingElem omega_apply_cleared(const WeylDatum& d, const GroupRingElem& f,
                                  OmegaOptions opts = {});

}  // namespace iwahori
