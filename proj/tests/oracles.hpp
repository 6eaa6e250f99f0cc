#pragma once

// Test-side generators and reference computations.  Nothing here calls the
// library's division, operators or formulas; only the plain data types.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "iwahori/group_ring.hpp"
#include "iwahori/root_system.hpp"

namespace oracle {

using iwahori::BigInt;
using iwahori::CoeffQ;
using iwahori::Coweight;
using iwahori::GroupRingElem;

/// PCG-style 64 bit LCG; deterministic across platforms.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : s_(seed * 0x9E3779B97F4A7C15ULL + 1) {}
  std::uint64_t next() {
    s_ = s_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return s_ >> 33;
  }
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t s_;
};

inline Coweight random_coweight(Lcg& g, std::size_t rank, int radius) {
  std::vector<int> v(rank);
  for (auto& x : v) x = g.range(-radius, radius);
  return Coweight(std::span<const int>(v));
}

inline GroupRingElem random_elem(Lcg& g, std::size_t rank, int terms, int radius = 2, int qmax = 2) {
  std::vector<GroupRingElem::Term> out;
  for (int k = 0; k < terms; ++k) {
    int c = g.range(-3, 3);
    if (c == 0) c = 1;
    out.push_back({{random_coweight(g, rank, radius), g.range(-qmax, qmax)}, BigInt(c)});
  }
  return GroupRingElem::from_terms(rank, std::move(out));
}

/// Dense reference: (coweight coords, q exponent) -> coefficient.
using Naive = std::map<std::pair<std::vector<int>, int>, long long>;

inline std::vector<int> coords(const Coweight& mu) {
  std::vector<int> v(mu.rank());
  for (std::size_t i = 0; i < mu.rank(); ++i) v[i] = mu[i];
  return v;
}

inline Naive to_naive(const GroupRingElem& f) {
  Naive n;
  for (const auto& t : f.terms()) n[{coords(t.m.mu), t.m.q}] += static_cast<long long>(t.c);
  return n;
}

inline void prune(Naive& n) {
  for (auto it = n.begin(); it != n.end();) it = it->second == 0 ? n.erase(it) : std::next(it);
}

inline Naive naive_mul(const Naive& a, const Naive& b) {
  Naive out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      std::vector<int> mu = ka.first;
      for (std::size_t i = 0; i < mu.size(); ++i) mu[i] += kb.first[i];
      out[{mu, ka.second + kb.second}] += ca * cb;
    }
  }
  prune(out);
  return out;
}

inline Naive naive_add(Naive a, const Naive& b, long long sign = 1) {
  for (const auto& [k, c] : b) a[k] += sign * c;
  prune(a);
  return a;
}

/// sum_{j in [lo, hi]} pi^{mu + j a}
inline GroupRingElem geometric(const Coweight& mu, const Coweight& a, int lo, int hi) {
  GroupRingElem out = GroupRingElem::zero(mu.rank());
  for (int j = lo; j <= hi; ++j) out += GroupRingElem::monomial(mu + j * a);
  return out;
}

/// (pi^mu - pi^{s mu}) / (1 - pi^{-a}) as an explicit geometric series.
inline GroupRingElem bernstein_quotient(const iwahori::RootSystem& rs, std::size_t i,
                                        const Coweight& mu) {
  const Coweight& a = rs.simple_coroot(i);
  const int k = mu[i];
  if (k > 0) return geometric(mu, a, -(k - 1), 0);
  if (k < 0) return -geometric(mu, a, 1, -k);
  return GroupRingElem::zero(mu.rank());
}

/// T_{s_i} pi^mu with T_{s_i} acting on the character line by eps.
inline GroupRingElem t_monomial(const iwahori::RootSystem& rs, std::size_t i, const CoeffQ& eps,
                                const Coweight& mu) {
  const GroupRingElem s_mu = GroupRingElem::monomial(rs.reflect(i, mu));
  return s_mu.scaled(eps) + bernstein_quotient(rs, i, mu).scaled(CoeffQ::q_power(1) - CoeffQ(1));
}

/// Demazure operator on pi^mu, i.e. pi^mu (1 - pi^{(1-k) a}) / (1 - pi^a).
inline GroupRingElem demazure_monomial(const iwahori::RootSystem& rs, std::size_t i,
                                       const Coweight& mu) {
  const Coweight& a = rs.simple_coroot(i);
  const int m = 1 - mu[i];
  if (m > 0) return geometric(mu, a, 0, m - 1);
  if (m < 0) return -geometric(mu, a, m, -1);
  return GroupRingElem::zero(mu.rank());
}

template <class F>
GroupRingElem extend_linearly(const GroupRingElem& f, F&& on_monomial) {
  GroupRingElem out = GroupRingElem::zero(f.rank());
  for (const auto& t : f.terms()) {
    out += on_monomial(t.m.mu).times_monomial(Coweight::zero(f.rank()), t.c, t.m.q);
  }
  return out;
}

/// Degrees of the basic invariants; |W| is their product and the Poincare
/// polynomial is prod (1 + q + ... + q^{d-1}).
inline std::vector<int> degrees(const iwahori::CartanType& t) {
  std::vector<int> d;
  const int n = t.rank;
  switch (t.family) {
    case 'A':
      for (int k = 2; k <= n + 1; ++k) d.push_back(k);
      break;
    case 'B':
    case 'C':
      for (int k = 1; k <= n; ++k) d.push_back(2 * k);
      break;
    case 'D':
      for (int k = 1; k < n; ++k) d.push_back(2 * k);
      d.push_back(n);
      break;
    case 'G': d = {2, 6}; break;
    case 'F': d = {2, 6, 8, 12}; break;
  }
  return d;
}

inline CoeffQ poincare(const iwahori::CartanType& t) {
  CoeffQ p(1);
  for (int d : degrees(t)) {
    CoeffQ f;
    for (int k = 0; k < d; ++k) f += CoeffQ::q_power(k);
    p = p * f;
  }
  return p;
}

/// Weyl dimension formula for the representation of the dual group with
/// highest weight lambda: prod_{a > 0} <a, lambda + rho^vee> / <a, rho^vee>.
inline long long weyl_dimension(const iwahori::RootSystem& rs, const Coweight& lambda) {
  BigInt num = 1, den = 1;
  for (const auto& root : rs.positive_roots()) {
    long long top = 0, bottom = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      top += static_cast<long long>(root.simple_coeffs[i]) * (lambda[i] + 1);
      bottom += root.simple_coeffs[i];
    }
    num *= top;
    den *= bottom;
  }
  return static_cast<long long>(num / den);
}

inline BigInt coefficient_sum_at_q(const GroupRingElem& f, long q) {
  iwahori::BigRational s = 0;
  for (const auto& t : f.terms()) {
    iwahori::BigRational qq = 1;
    for (int k = 0; k < std::abs(t.m.q); ++k) qq *= q;
    s += t.m.q >= 0 ? iwahori::BigRational(t.c) * qq : iwahori::BigRational(t.c) / qq;
  }
  return boost::multiprecision::numerator(s);
}

}  // namespace oracle
