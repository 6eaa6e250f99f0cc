#include "iwahori/weyl_operator.hpp"

#include <vector>

namespace iwahori {

WeylOperator WeylOperator::identity(const WeylGroup& W) { return element(W, W.identity()); }

WeylOperator WeylOperator::element(const WeylGroup& W, std::size_t w) {
  WeylOperator op(W);
  op.add_term(w, GroupRingElem::one(W.root_system().rank()));
  return op;
}

WeylOperator WeylOperator::multiplication(const WeylGroup& W, const RationalElem& f) {
  WeylOperator op(W);
  op.add_term(W.identity(), f);
  return op;
}

void WeylOperator::add_term(std::size_t w, const RationalElem& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  for (const auto& [w, f] : o.terms_) add_term(w, f);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  for (const auto& [w, f] : o.terms_) add_term(w, -f);
  return *this;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
  const WeylGroup& W = *a.W_;
  WeylOperator out(W);
  for (const auto& [w, f] : a.terms_)
    for (const auto& [v, g] : b.terms_) out.add_term(W.multiply(w, v), f * weyl_act(W, w, g));
  return out;
}

RationalElem WeylOperator::apply(const RationalElem& g) const {
  RationalElem sum(GroupRingElem::zero(W_->root_system().rank()));
  for (const auto& [w, f] : terms_) sum += f * weyl_act(*W_, w, g);
  return sum;
}

bool operator==(const WeylOperator& a, const WeylOperator& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

WeylOperator demazure_operator(const WeylGroup& W, std::size_t i) {
  const RootSystem& rs = W.root_system();
  const Coweight& a = rs.simple_coroot(i);
  const RationalElem inv(GroupRingElem::one(rs.rank()),
                         GroupRingElem::monomial(-a) - GroupRingElem::one(rs.rank()));
  WeylOperator op = WeylOperator::multiplication(W, GroupRingElem::monomial(-a)) -
                    WeylOperator::element(W, W.simple(i));
  return WeylOperator::multiplication(W, inv) * op;
}

WeylOperator t_operator(const WeylGroup& W, const HeckeCharacter& eps, std::size_t i) {
  const RootSystem& rs = W.root_system();
  const std::size_t n = rs.rank();
  const GroupRingElem den = one_minus(-rs.simple_coroot(i));
  const CoeffQ q_minus_one = CoeffQ::q_power(1) - CoeffQ(1);
  const RationalElem correction(GroupRingElem::constant(n, q_minus_one), den);
  const RationalElem on_s = RationalElem(GroupRingElem::constant(n, eps.value(i))) - correction;
  return WeylOperator::multiplication(W, on_s) * WeylOperator::element(W, W.simple(i)) +
         WeylOperator::multiplication(W, correction);
}

WeylOperator fraktur_operator(const WeylGroup& W, const HeckeCharacter& eps, std::size_t i) {
  const Coweight& r = eps.rho_eps();
  return WeylOperator::multiplication(W, GroupRingElem::monomial(r)) * t_operator(W, eps, i) *
         WeylOperator::multiplication(W, GroupRingElem::monomial(-r));
}

WeylOperator alternator_operator(const WeylGroup& W) {
  WeylOperator op(W);
  for (std::size_t w = 0; w < W.size(); ++w) {
    op += WeylOperator::multiplication(W, GroupRingElem::constant(W.root_system().rank(),
                                                                   CoeffQ(W[w].sign()))) *
          WeylOperator::element(W, w);
  }
  return op;
}

WeylOperator fraktur_sum_operator(const WeylGroup& W, const HeckeCharacter& eps) {
  const std::size_t n = W.root_system().rank();
  std::vector<WeylOperator> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(fraktur_operator(W, eps, i));
  std::vector<WeylOperator> parts(W.size(), WeylOperator(W));
  parts[W.identity()] = WeylOperator::identity(W);
  WeylOperator sum = parts[W.identity()];
  for (std::size_t w = 1; w < W.size(); ++w) {
    const int first = W[w].reduced_word.front();
    parts[w] = gens[static_cast<std::size_t>(first)] *
               parts[W.left_mult(static_cast<std::size_t>(first), w)];
    sum += parts[w];
  }
  return sum;
}

WeylOperator omega_operator(const WeylDatum& d, OmegaOptions opts) {
  const WeylGroup& W = d.W();
  const std::size_t n = d.rank();
  GroupRingElem prod = GroupRingElem::monomial(d.rho());
  for (const auto& root : d.rs().positive_roots()) prod = prod * one_minus(-root.coroot);
  GroupRingElem sign = GroupRingElem::one(n);
  if (opts.sign_correction && d.longest_length() % 2 == 1) sign = -sign;
  return WeylOperator::multiplication(W, RationalElem(sign, prod)) * alternator_operator(W) *
         WeylOperator::multiplication(W, GroupRingElem::monomial(-d.rho()));
}

}  // namespace iwahori
