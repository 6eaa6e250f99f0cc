#include "iwahori/group_ring.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "iwahori/errors.hpp"
#include "iwahori/root_system.hpp"

namespace iwahori {

// ---------------------------------------------------------------------------
// CoeffQ

CoeffQ::CoeffQ(long c) {
  if (c != 0) terms_.emplace_back(0, BigInt(c));
}

CoeffQ CoeffQ::q_power(int k, BigInt c) {
  CoeffQ r;
  if (c != 0) r.terms_.emplace_back(k, std::move(c));
  return r;
}

CoeffQ CoeffQ::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  CoeffQ r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      if (r.terms_.back().second == 0) r.terms_.pop_back();
    } else if (t.second != 0) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

BigInt CoeffQ::coefficient(int k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, int e) { return t.first < e; });
  return (it != terms_.end() && it->first == k) ? it->second : BigInt(0);
}

int CoeffQ::min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
int CoeffQ::max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

CoeffQ CoeffQ::operator-() const {
  CoeffQ r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <class T, class Less, class Coef>
std::vector<T> merge_sorted(const std::vector<T>& a, const std::vector<T>& b, int sign, Less less,
                            Coef coef) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || less(b[j], a[i])) {
      out.push_back(b[j++]);
      if (sign < 0) coef(out.back()) = -coef(out.back());
    } else {
      BigInt c = coef(a[i]);
      if (sign < 0) c -= coef(b[j]);
      else c += coef(b[j]);
      if (c != 0) {
        out.push_back(a[i]);
        coef(out.back()) = std::move(c);
      }
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

CoeffQ& CoeffQ::operator+=(const CoeffQ& o) {
  terms_ = merge_sorted(
      terms_, o.terms_, +1, [](const Term& a, const Term& b) { return a.first < b.first; },
      [](auto& t) -> auto& { return t.second; });
  return *this;
}

CoeffQ& CoeffQ::operator-=(const CoeffQ& o) {
  terms_ = merge_sorted(
      terms_, o.terms_, -1, [](const Term& a, const Term& b) { return a.first < b.first; },
      [](auto& t) -> auto& { return t.second; });
  return *this;
}

CoeffQ operator*(const CoeffQ& a, const CoeffQ& b) {
  std::vector<CoeffQ::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.emplace_back(x.first + y.first, x.second * y.second);
  return CoeffQ::from_terms(std::move(out));
}

BigRational CoeffQ::evaluate(const BigRational& q) const {
  BigRational sum = 0;
  for (const auto& [k, c] : terms_) {
    BigRational p = 1;
    if (k >= 0) {
      for (int e = 0; e < k; ++e) p *= q;
    } else {
      if (q == 0) throw NegativeQExponentAtZero("q^" + std::to_string(k) + " at q = 0");
      for (int e = 0; e < -k; ++e) p /= q;
    }
    sum += BigRational(c) * p;
  }
  return sum;
}

namespace {

std::string q_term(int k, const BigInt& mag) {
  std::string s;
  if (k == 0) return mag.str();
  if (mag != 1) s = mag.str() + "*";
  s += "q";
  if (k != 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

std::string CoeffQ::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool neg = it->second < 0;
    const std::string body = q_term(it->first, neg ? BigInt(-it->second) : it->second);
    if (it == terms_.rbegin()) {
      s = (neg ? "-" : "") + body;
    } else {
      s += (neg ? " - " : " + ") + body;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// GroupRingElem

namespace {

bool term_less(const GroupRingElem::Term& a, const GroupRingElem::Term& b) { return a.m < b.m; }

}  // namespace

GroupRingElem GroupRingElem::one(std::size_t rank) {
  return monomial(Coweight::zero(rank));
}

GroupRingElem GroupRingElem::constant(std::size_t rank, const CoeffQ& c) {
  return term(Coweight::zero(rank), c);
}

GroupRingElem GroupRingElem::monomial(const Coweight& mu, BigInt c, int k) {
  GroupRingElem r(mu.rank());
  if (c != 0) r.terms_.push_back({{mu, k}, std::move(c)});
  return r;
}

GroupRingElem GroupRingElem::term(const Coweight& mu, const CoeffQ& c) {
  GroupRingElem r(mu.rank());
  for (const auto& [k, v] : c.terms()) r.terms_.push_back({{mu, k}, v});
  return r;
}

GroupRingElem GroupRingElem::from_terms(std::size_t rank, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  GroupRingElem r(rank);
  r.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().m == t.m) {
      r.terms_.back().c += t.c;
      if (r.terms_.back().c == 0) r.terms_.pop_back();
    } else if (t.c != 0) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

std::vector<Coweight> GroupRingElem::support() const {
  std::vector<Coweight> out;
  for (const auto& t : terms_)
    if (out.empty() || out.back() != t.m.mu) out.push_back(t.m.mu);
  return out;
}

CoeffQ GroupRingElem::coefficient(const Coweight& mu) const {
  auto lo = std::lower_bound(terms_.begin(), terms_.end(), Monomial{mu, std::numeric_limits<int>::min()},
                             [](const Term& t, const Monomial& m) { return t.m < m; });
  std::vector<CoeffQ::Term> ks;
  for (auto it = lo; it != terms_.end() && it->m.mu == mu; ++it) ks.emplace_back(it->m.q, it->c);
  return CoeffQ::from_terms(std::move(ks));
}

std::vector<std::pair<Coweight, CoeffQ>> GroupRingElem::grouped() const {
  std::vector<std::pair<Coweight, CoeffQ>> out;
  std::size_t i = 0;
  while (i < terms_.size()) {
    std::vector<CoeffQ::Term> ks;
    const Coweight& mu = terms_[i].m.mu;
    std::size_t j = i;
    for (; j < terms_.size() && terms_[j].m.mu == mu; ++j) ks.emplace_back(terms_[j].m.q, terms_[j].c);
    out.emplace_back(mu, CoeffQ::from_terms(std::move(ks)));
    i = j;
  }
  return out;
}

int GroupRingElem::min_q_exponent() const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.m.q < m) m = t.m.q;
    first = false;
  }
  return m;
}

int GroupRingElem::max_q_exponent() const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.m.q > m) m = t.m.q;
    first = false;
  }
  return m;
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  if (rank_ == 0) rank_ = o.rank_;
  terms_ = merge_sorted(terms_, o.terms_, +1, term_less, [](auto& t) -> auto& { return t.c; });
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  if (rank_ == 0) rank_ = o.rank_;
  terms_ = merge_sorted(terms_, o.terms_, -1, term_less, [](auto& t) -> auto& { return t.c; });
  return *this;
}

GroupRingElem GroupRingElem::times_monomial(const Coweight& mu, const BigInt& c, int k) const {
  GroupRingElem r(rank_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Translation preserves the monomial order, so no re-sort is needed.
  for (const auto& t : terms_) r.terms_.push_back({{t.m.mu + mu, t.m.q + k}, t.c * c});
  return r;
}

GroupRingElem GroupRingElem::scaled(const CoeffQ& c) const {
  return *this * constant(rank_, c);
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  const std::size_t rank = std::max(a.rank_, b.rank_);
  if (a.terms_.empty() || b.terms_.empty()) return GroupRingElem(rank);
  if (a.terms_.size() == 1) {
    const auto& t = a.terms_.front();
    return b.times_monomial(t.m.mu, t.c, t.m.q);
  }
  if (b.terms_.size() == 1) {
    const auto& t = b.terms_.front();
    return a.times_monomial(t.m.mu, t.c, t.m.q);
  }
  std::vector<GroupRingElem::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back({{x.m.mu + y.m.mu, x.m.q + y.m.q}, x.c * y.c});
  return GroupRingElem::from_terms(rank, std::move(out));
}

bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  }
  return true;
}

std::string GroupRingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [mu, c] : grouped()) {
    std::string body;
    const std::string cs = c.to_string();
    if (mu.is_zero()) {
      body = c.is_monomial() ? cs : "(" + cs + ")";
    } else if (!c.is_monomial()) {
      body = "(" + cs + ")*pi" + mu.to_string();
    } else if (cs == "1") {
      body = "pi" + mu.to_string();
    } else if (cs == "-1") {
      body = "-pi" + mu.to_string();
    } else {
      body = cs + "*pi" + mu.to_string();
    }
    if (first) {
      s = body;
      first = false;
    } else if (body[0] == '-') {
      s += " - " + body.substr(1);
    } else {
      s += " + " + body;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

GroupRingElem weyl_act(const WeylGroup& W, std::size_t w, const GroupRingElem& f) {
  if (w == W.identity()) return f;
  return f.map_coweights([&](const Coweight& mu) { return W.act(w, mu); });
}

GroupRingElem reflect(const RootSystem& rs, std::size_t i, const GroupRingElem& f) {
  return f.map_coweights([&](const Coweight& mu) { return rs.reflect(i, mu); });
}

namespace {

struct DegreeBox {
  std::vector<int> lo, hi;
};

// Per-variable exponent range (coweight coordinates, then q).
DegreeBox degree_box(const GroupRingElem& f) {
  const std::size_t n = f.rank();
  DegreeBox b{std::vector<int>(n + 1, std::numeric_limits<int>::max()),
              std::vector<int>(n + 1, std::numeric_limits<int>::min())};
  for (const auto& t : f.terms()) {
    for (std::size_t j = 0; j <= n; ++j) {
      const int e = j < n ? t.m.mu[j] : t.m.q;
      b.lo[j] = std::min(b.lo[j], e);
      b.hi[j] = std::max(b.hi[j], e);
    }
  }
  return b;
}

}  // namespace

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// f / (1 - x) for x = q^k pi^beta.  Along each line {m + t*(beta, k)} the
// quotient coefficients are prefix sums of those of f, and the division is
// exact iff every line sums to zero.
std::optional<GroupRingElem> div_one_minus(const GroupRingElem& f, const Monomial& d,
                                           std::size_t n) {
  std::size_t pivot = n;
  for (std::size_t j = 0; j < n; ++j)
    if (d.mu[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot == n && d.q == 0) return std::nullopt;
  const int dp = pivot < n ? d.mu[pivot] : d.q;

  struct Entry {
    Monomial base;
    int t;
    const BigInt* c;
  };
  std::vector<Entry> entries;
  entries.reserve(f.size());
  for (const auto& term : f.terms()) {
    const int mp = pivot < n ? term.m.mu[pivot] : term.m.q;
    const int t = floor_div(mp, dp);
    entries.push_back({{term.m.mu - t * d.mu, term.m.q - t * d.q}, t, &term.c});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.base != b.base) return a.base < b.base;
    return a.t < b.t;
  });

  std::vector<GroupRingElem::Term> out;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    BigInt running = 0;
    while (j < entries.size() && entries[j].base == entries[i].base) {
      running += *entries[j].c;
      const bool last = j + 1 == entries.size() || entries[j + 1].base != entries[i].base;
      if (last) break;
      if (running != 0) {
        for (int t = entries[j].t; t < entries[j + 1].t; ++t) {
          out.push_back({{entries[i].base.mu + t * d.mu, entries[i].base.q + t * d.q}, running});
        }
      }
      ++j;
    }
    if (running != 0) return std::nullopt;
    i = j + 1;
  }
  return GroupRingElem::from_terms(n, std::move(out));
}

}  // namespace

std::optional<GroupRingElem> try_exact_div(const GroupRingElem& f, const GroupRingElem& g) {
  if (g.is_zero()) throw Error("division by zero in the group ring");
  const std::size_t n = std::max(f.rank(), g.rank());
  if (f.is_zero()) return GroupRingElem(n);

  if (g.is_single_term()) {
    const auto& lead = g.terms().front();
    std::vector<GroupRingElem::Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      BigInt qt, rem;
      boost::multiprecision::divide_qr(t.c, lead.c, qt, rem);
      if (rem != 0) return std::nullopt;
      out.push_back({{t.m.mu - lead.m.mu, t.m.q - lead.m.q}, qt});
    }
    return GroupRingElem::from_terms(n, std::move(out));
  }

  if (g.size() == 2) {
    const auto& a = g.terms()[0];
    const auto& b = g.terms()[1];
    if ((a.c == 1 || a.c == -1) && b.c == -a.c) {
      // g = a.c * x^a (1 - x^(b - a))
      GroupRingElem shifted = f.times_monomial(-a.m.mu, a.c, -a.m.q);
      return div_one_minus(shifted, {b.m.mu - a.m.mu, b.m.q - a.m.q}, n);
    }
  }

  // If f = g*h, then in every variable the top (bottom) degree of h is the
  // top (bottom) degree of f minus that of g.  Any candidate quotient term
  // outside this box proves non-divisibility, and since candidates strictly
  // decrease in a total order, the box also bounds the number of steps.
  const DegreeBox bf = degree_box(f), bg = degree_box(g);
  std::vector<int> lo(n + 1), hi(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    lo[j] = bf.lo[j] - bg.lo[j];
    hi[j] = bf.hi[j] - bg.hi[j];
    if (lo[j] > hi[j]) return std::nullopt;
  }

  std::map<Monomial, BigInt> rem;
  for (const auto& t : f.terms()) rem.emplace_hint(rem.end(), t.m, t.c);
  const auto& lead = g.terms().back();
  std::vector<GroupRingElem::Term> quotient;

  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    Monomial qm{top->first.mu - lead.m.mu, top->first.q - lead.m.q};
    for (std::size_t j = 0; j <= n; ++j) {
      const int e = j < n ? qm.mu[j] : qm.q;
      if (e < lo[j] || e > hi[j]) return std::nullopt;
    }
    BigInt qc, r;
    boost::multiprecision::divide_qr(top->second, lead.c, qc, r);
    if (r != 0) return std::nullopt;
    for (const auto& t : g.terms()) {
      Monomial m{t.m.mu + qm.mu, t.m.q + qm.q};
      auto [it, inserted] = rem.try_emplace(m, 0);
      it->second -= qc * t.c;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({qm, std::move(qc)});
  }
  return GroupRingElem::from_terms(n, std::move(quotient));
}

GroupRingElem exact_div(const GroupRingElem& f, const GroupRingElem& g) {
  auto h = try_exact_div(f, g);
  if (!h) {
    throw NotDivisible("(" + f.to_string() + ") is not divisible by (" + g.to_string() + ")");
  }
  return std::move(*h);
}

GroupRingElem specialize_q(const GroupRingElem& f, const BigInt& v) {
  std::vector<GroupRingElem::Term> out;
  for (const auto& t : f.terms()) {
    if (t.m.q < 0) {
      if (v == 0) {
        throw NegativeQExponentAtZero("term with q^" + std::to_string(t.m.q) +
                                      " cannot be evaluated at q = 0");
      }
      BigInt d = boost::multiprecision::pow(v, static_cast<unsigned>(-t.m.q));
      BigInt qt, rem;
      boost::multiprecision::divide_qr(t.c, d, qt, rem);
      if (rem != 0) {
        throw Error("specialize_q: non-integral result; use specialize_q_rational");
      }
      out.push_back({{t.m.mu, 0}, qt});
    } else {
      out.push_back({{t.m.mu, 0}, t.c * boost::multiprecision::pow(v, static_cast<unsigned>(t.m.q))});
    }
  }
  return GroupRingElem::from_terms(f.rank(), std::move(out));
}

std::vector<std::pair<Coweight, BigRational>> specialize_q_rational(const GroupRingElem& f,
                                                                  const BigRational& v) {
  std::vector<std::pair<Coweight, BigRational>> out;
  for (const auto& [mu, c] : f.grouped()) {
    BigRational x = c.evaluate(v);
    if (x != 0) out.emplace_back(mu, x);
  }
  return out;
}

GroupRingElem one_minus(const Coweight& beta, const BigInt& c, int k) {
  return GroupRingElem::one(beta.rank()) - GroupRingElem::monomial(beta, c, k);
}

}  // namespace iwahori
