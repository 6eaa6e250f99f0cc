#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwahori/coweight.hpp"

namespace iwahori {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class WeylGroup;
class RootSystem;

/// Sparse Laurent polynomial in q with integer coefficients.
class CoeffQ {
 public:
  using Term = std::pair<int, BigInt>;  // (q exponent, coefficient)

  CoeffQ() = default;
  CoeffQ(long c);  // NOLINT(google-explicit-constructor): constants read naturally
  static CoeffQ q_power(int k, BigInt c = 1);
  /// Builds from unsorted (exponent, coefficient) pairs, merging duplicates.
  static CoeffQ from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  BigInt coefficient(int k) const;
  int min_exponent() const;
  int max_exponent() const;
  bool is_monomial() const { return terms_.size() == 1; }

  CoeffQ operator-() const;
  CoeffQ& operator+=(const CoeffQ& o);
  CoeffQ& operator-=(const CoeffQ& o);
  friend CoeffQ operator+(CoeffQ a, const CoeffQ& b) { return a += b; }
  friend CoeffQ operator-(CoeffQ a, const CoeffQ& b) { return a -= b; }
  friend CoeffQ operator*(const CoeffQ& a, const CoeffQ& b);

  BigRational evaluate(const BigRational& q) const;

  friend bool operator==(const CoeffQ&, const CoeffQ&) = default;

  /// Descending powers: "q^2 - q + 3", "-q^-1", "0".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;  // ascending exponent, no zero coefficients
};

/// Exponent of one basis monomial q^k pi^mu.  Ordered lexicographically on
/// the coweight, then on the q exponent; the order is compatible with
/// multiplication, which is what the division routine relies on.
struct Monomial {
  Coweight mu;
  int q = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Element of Z[q, q^-1][P^vee]: a finite sum of c * q^k * pi^mu.
class GroupRingElem {
 public:
  struct Term {
    Monomial m;
    BigInt c;
  };

  GroupRingElem() = default;
  explicit GroupRingElem(std::size_t rank) : rank_(rank) {}

  static GroupRingElem zero(std::size_t rank) { return GroupRingElem(rank); }
  static GroupRingElem one(std::size_t rank);
  static GroupRingElem constant(std::size_t rank, const CoeffQ& c);
  /// c * q^k * pi^mu
  static GroupRingElem monomial(const Coweight& mu, BigInt c = 1, int k = 0);
  static GroupRingElem term(const Coweight& mu, const CoeffQ& c);
  /// Merges duplicates and drops zeros.
  static GroupRingElem from_terms(std::size_t rank, std::vector<Term> terms);

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_single_term() const { return terms_.size() == 1; }

  /// Coweights in the support, ascending, without repetition.
  std::vector<Coweight> support() const;
  CoeffQ coefficient(const Coweight& mu) const;
  /// Pairs (coweight, coefficient) grouped by coweight in canonical order.
  std::vector<std::pair<Coweight, CoeffQ>> grouped() const;
  int min_q_exponent() const;
  int max_q_exponent() const;

  GroupRingElem operator-() const;
  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  GroupRingElem& operator*=(const GroupRingElem& o) { return *this = *this * o; }

  /// Multiply by c * q^k * pi^mu.
  GroupRingElem times_monomial(const Coweight& mu, const BigInt& c = 1, int k = 0) const;
  GroupRingElem scaled(const CoeffQ& c) const;
  /// Apply an invertible integer map to every exponent coweight.
  template <class F>
  GroupRingElem map_coweights(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({{f(t.m.mu), t.m.q}, t.c});
    return from_terms(rank_, std::move(out));
  }

  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b);

  /// Canonical text: groups by coweight in ascending order, e.g.
  /// "-pi[-2] + (q - 1) + q*pi[2]".  The zero element prints as "0".
  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  std::vector<Term> terms_;  // ascending Monomial order, no zero coefficients
};

/// w(f): acts on exponents, fixes q.
GroupRingElem weyl_act(const WeylGroup& W, std::size_t w, const GroupRingElem& f);
/// s_i(f)
GroupRingElem reflect(const RootSystem& rs, std::size_t i, const GroupRingElem& f);

/// h with f = g * h, or nullopt.  Leading-monomial elimination with a
/// per-variable degree box that guarantees termination.
std::optional<GroupRingElem> try_exact_div(const GroupRingElem& f, const GroupRingElem& g);
/// Same as try_exact_div but throws NotDivisible.
GroupRingElem exact_div(const GroupRingElem& f, const GroupRingElem& g);

/// Substitute q <- v.  Throws NegativeQExponentAtZero when v = 0 and f has
/// negative powers of q.
GroupRingElem specialize_q(const GroupRingElem& f, const BigInt& v);

/// Substitute a rational value; the result keeps rational coefficients.
std::vector<std::pair<Coweight, BigRational>> specialize_q_rational(const GroupRingElem& f,
                                                                  const BigRational& v);

/// Product of (1 - c q^k pi^beta) style binomials is common enough to name.
GroupRingElem one_minus(const Coweight& beta, const BigInt& c = 1, int k = 0);

}  // namespace iwahori
