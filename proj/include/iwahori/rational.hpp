#pragma once

#include "iwahori/group_ring.hpp"

namespace iwahori {

/// Element num/den of the fraction field.  No canonical form is kept:
/// equality is decided by cross-multiplication, and values leave the field
/// through clear(), which divides exactly or throws.
class RationalElem {
 public:
  RationalElem() = default;
  RationalElem(GroupRingElem num);  // NOLINT(google-explicit-constructor)
  RationalElem(GroupRingElem num, GroupRingElem den);

  const GroupRingElem& num() const { return num_; }
  const GroupRingElem& den() const { return den_; }
  std::size_t rank() const { return num_.rank(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalElem operator-() const { return {-num_, den_}; }
  RationalElem& operator+=(const RationalElem& o);
  RationalElem& operator-=(const RationalElem& o) { return *this += -o; }
  RationalElem& operator*=(const RationalElem& o);
  RationalElem& operator/=(const RationalElem& o);
  friend RationalElem operator+(RationalElem a, const RationalElem& b) { return a += b; }
  friend RationalElem operator-(RationalElem a, const RationalElem& b) { return a -= b; }
  friend RationalElem operator*(RationalElem a, const RationalElem& b) { return a *= b; }
  friend RationalElem operator/(RationalElem a, const RationalElem& b) { return a /= b; }

  RationalElem inverse() const;

  /// num * other.den == other.num * den
  friend bool operator==(const RationalElem& a, const RationalElem& b);

  /// The polynomial this fraction equals; throws NotDivisible otherwise.
  GroupRingElem clear() const;
  std::optional<GroupRingElem> try_clear() const;

  std::string to_string() const;

 private:
  GroupRingElem num_;
  GroupRingElem den_;
};

RationalElem weyl_act(const WeylGroup& W, std::size_t w, const RationalElem& f);
RationalElem reflect(const RootSystem& rs, std::size_t i, const RationalElem& f);

}  // namespace iwahori
