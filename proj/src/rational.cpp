#include "iwahori/rational.hpp"

#include "iwahori/errors.hpp"

namespace iwahori {

RationalElem::RationalElem(GroupRingElem num)
    : num_(std::move(num)), den_(GroupRingElem::one(num_.rank())) {}

RationalElem::RationalElem(GroupRingElem num, GroupRingElem den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("zero denominator");
  // Monomial denominators are units of the group ring; fold them away.
  if (den_.is_single_term() && (den_.terms().front().c == 1 || den_.terms().front().c == -1)) {
    num_ = exact_div(num_, den_);
    den_ = GroupRingElem::one(num_.rank() ? num_.rank() : den_.rank());
  }
}

RationalElem& RationalElem::operator+=(const RationalElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    return *this;
  }
  // Keep denominators from compounding when one divides the other, which is
  // the usual situation for Weyl-conjugate denominators.
  if (auto k = try_exact_div(o.den_, den_)) {
    num_ = num_ * *k + o.num_;
    den_ = o.den_;
    return *this;
  }
  if (auto k = try_exact_div(den_, o.den_)) {
    num_ += o.num_ * *k;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  return *this;
}

RationalElem& RationalElem::operator*=(const RationalElem& o) {
  if (auto k = try_exact_div(num_, o.den_)) {
    num_ = *k * o.num_;
  } else if (auto k2 = try_exact_div(o.num_, den_)) {
    num_ = num_ * *k2;
    den_ = o.den_;
    return *this;
  } else {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
  }
  return *this;
}

RationalElem RationalElem::inverse() const {
  if (num_.is_zero()) throw Error("inverse of zero");
  return {den_, num_};
}

RationalElem& RationalElem::operator/=(const RationalElem& o) { return *this *= o.inverse(); }

bool operator==(const RationalElem& a, const RationalElem& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::optional<GroupRingElem> RationalElem::try_clear() const { return try_exact_div(num_, den_); }

GroupRingElem RationalElem::clear() const { return exact_div(num_, den_); }

std::string RationalElem::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalElem weyl_act(const WeylGroup& W, std::size_t w, const RationalElem& f) {
  return {weyl_act(W, w, f.num()), weyl_act(W, w, f.den())};
}

RationalElem reflect(const RootSystem& rs, std::size_t i, const RationalElem& f) {
  return {reflect(rs, i, f.num()), reflect(rs, i, f.den())};
}

}  // namespace iwahori
