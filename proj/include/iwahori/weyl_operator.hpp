#pragma once

#include <map>

#include "iwahori/hecke.hpp"
#include "iwahori/rational.hpp"

namespace iwahori {

/// Finite sum  sum_w f_w w  with f_w in Frac(R), acting by
/// (sum f_w w)(g) = sum f_w w(g).  Distinct group elements are linearly
/// independent over Frac(R), so two operators agree exactly when their
/// coefficients agree.
class WeylOperator {
 public:
  explicit WeylOperator(const WeylGroup& W) : W_(&W) {}

  static WeylOperator identity(const WeylGroup& W);
  static WeylOperator element(const WeylGroup& W, std::size_t w);
  /// Multiplication by f.
  static WeylOperator multiplication(const WeylGroup& W, const RationalElem& f);

  const std::map<std::size_t, RationalElem>& terms() const { return terms_; }
  const WeylGroup& group() const { return *W_; }

  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  /// Composition a o b:  (f w) o (g v) = f w(g) wv.
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);

  RationalElem apply(const RationalElem& g) const;

  friend bool operator==(const WeylOperator& a, const WeylOperator& b);

 private:
  void add_term(std::size_t w, const RationalElem& f);

  const WeylGroup* W_;
  std::map<std::size_t, RationalElem> terms_;
};

/// (pi^{-a} - 1)^{-1} (pi^{-a} - s_i)
WeylOperator demazure_operator(const WeylGroup& W, std::size_t i);
/// [eps_i + (1 - q)/(1 - pi^{-a})] s_i + (q - 1)/(1 - pi^{-a})
WeylOperator t_operator(const WeylGroup& W, const HeckeCharacter& eps, std::size_t i);
/// pi^{rho_eps} T_i pi^{-rho_eps}
WeylOperator fraktur_operator(const WeylGroup& W, const HeckeCharacter& eps, std::size_t i);
/// sum_w (-1)^{l(w)} w
WeylOperator alternator_operator(const WeylGroup& W);
/// Sum over W of the conjugated operators, composed along the stored words.
WeylOperator fraktur_sum_operator(const WeylGroup& W, const HeckeCharacter& eps);
WeylOperator omega_operator(const WeylDatum& d, OmegaOptions opts = {});

}  // namespace iwahori
