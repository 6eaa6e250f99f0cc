#include "iwahori/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

#include "iwahori/errors.hpp"

namespace iwahori {

std::string CartanType::to_string() const {
  return std::string(1, family) + std::to_string(rank);
}

CartanType CartanType::parse(const std::string& text) {
  if (text.size() < 2) throw ParseError("bad Cartan type '" + text + "'");
  CartanType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const std::string digits = text.substr(1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("bad Cartan type '" + text + "'");
  }
  t.rank = std::stoi(digits);
  if (!is_admissible(t)) throw InadmissibleType("inadmissible Cartan type '" + text + "'");
  return t;
}

bool is_admissible(const CartanType& t) {
  if (t.rank < 1 || static_cast<std::size_t>(t.rank) > kMaxRank) return false;
  switch (t.family) {
    case 'A': return t.rank >= 1;
    case 'B':
    case 'C': return t.rank >= 2;
    case 'D': return t.rank >= 3;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
    default: return false;
  }
}

const char* to_string(LengthClass c) {
  return c == LengthClass::Long ? "long" : "short";
}

namespace {

std::vector<int> cartan_matrix(const CartanType& t) {
  const int n = t.rank;
  std::vector<int> a(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  auto bond = [&](int i, int j, int aij, int aji) {
    at(i, j) = aij;
    at(j, i) = aji;
  };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n - 1, -2, -1);  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n - 1, -1, -2);  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 3, n - 1, -1, -1);
      break;
    case 'F':
      bond(0, 1, -1, -1);
      bond(1, 2, -2, -1);
      bond(2, 3, -1, -1);
      break;
    case 'G':
      bond(0, 1, -1, -3);  // alpha_1 short
      break;
    default:
      throw InadmissibleType("unknown family");
  }
  return a;
}

struct Fraction {
  long num = 1;
  long den = 1;
  bool operator<(const Fraction& o) const { return num * o.den < o.num * den; }
  bool operator==(const Fraction& o) const { return num * o.den == o.num * den; }
};

}  // namespace

RootSystem RootSystem::build(const CartanType& t) {
  if (!is_admissible(t)) {
    throw InadmissibleType("inadmissible Cartan type " + t.to_string());
  }
  RootSystem rs;
  rs.type_ = t;
  rs.rank_ = static_cast<std::size_t>(t.rank);
  rs.cartan_ = cartan_matrix(t);
  const std::size_t n = rs.rank_;

  // Squared lengths of simple roots: |alpha_j|^2 / |alpha_i|^2 = A_ji / A_ij.
  std::vector<Fraction> sq(n);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<std::size_t> todo{0};
  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[j] || rs.cartan(i, j) == 0) continue;
      Fraction f{sq[i].num * rs.cartan(j, i), sq[i].den * rs.cartan(i, j)};
      long g = std::gcd(f.num, f.den);
      sq[j] = {f.num / g, f.den / g};
      if (sq[j].den < 0) sq[j] = {-sq[j].num, -sq[j].den};
      seen[j] = true;
      todo.push_back(j);
    }
  }
  Fraction longest = *std::max_element(sq.begin(), sq.end());
  rs.simply_laced_ = std::all_of(sq.begin(), sq.end(),
                                 [&](const Fraction& f) { return f == longest; });

  // Closure from the simple roots, carrying coroots and length classes along.
  std::vector<PositiveRoot> roots;
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < n; ++i) {
    PositiveRoot r;
    r.simple_coeffs.assign(n, 0);
    r.simple_coeffs[i] = 1;
    r.coroot = Coweight::zero(n);
    for (std::size_t j = 0; j < n; ++j) r.coroot[j] = rs.cartan(j, i);
    r.length = (sq[i] == longest) ? LengthClass::Long : LengthClass::Short;
    r.height = 1;
    index[r.simple_coeffs] = static_cast<int>(roots.size());
    roots.push_back(std::move(r));
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> next = rs.reflect_root(i, roots[k].simple_coeffs);
      if (std::any_of(next.begin(), next.end(), [](int c) { return c < 0; })) continue;
      if (index.count(next)) continue;
      PositiveRoot r;
      r.simple_coeffs = next;
      r.coroot = rs.reflect(i, roots[k].coroot);
      r.length = roots[k].length;
      r.height = std::accumulate(next.begin(), next.end(), 0);
      index[next] = static_cast<int>(roots.size());
      roots.push_back(std::move(r));
    }
  }
  std::stable_sort(roots.begin(), roots.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple_coeffs > b.simple_coeffs;  // alpha_1 before alpha_2 at height 1
  });
  rs.roots_ = std::move(roots);
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
    rs.root_index_[rs.roots_[k].simple_coeffs] = static_cast<int>(k);
  }
  return rs;
}

int RootSystem::braid_order(std::size_t i, std::size_t j) const {
  if (i == j) return 1;
  switch (cartan(i, j) * cartan(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw Error("unexpected Cartan product");
  }
}

Coweight RootSystem::reflect(std::size_t i, const Coweight& mu) const {
  Coweight r = mu;
  const int c = mu[i];
  if (c == 0) return r;
  for (std::size_t j = 0; j < rank_; ++j) r[j] -= c * cartan(j, i);
  return r;
}

std::vector<int> RootSystem::reflect_root(std::size_t i, std::span<const int> beta) const {
  int c = 0;  // <beta, alpha_i^vee>
  for (std::size_t j = 0; j < rank_; ++j) c += beta[j] * cartan(j, i);
  std::vector<int> r(beta.begin(), beta.end());
  r[i] -= c;
  return r;
}

int RootSystem::pairing(std::span<const int> beta, const Coweight& mu) const {
  int s = 0;
  for (std::size_t j = 0; j < rank_; ++j) s += beta[j] * mu[j];
  return s;
}

int RootSystem::find_root(std::span<const int> beta, bool* negative) const {
  std::vector<int> key(beta.begin(), beta.end());
  bool neg = false;
  if (std::any_of(key.begin(), key.end(), [](int c) { return c < 0; })) {
    neg = true;
    for (auto& c : key) c = -c;
  }
  auto it = root_index_.find(key);
  if (it == root_index_.end()) return -1;
  if (negative) *negative = neg;
  return it->second;
}

Coweight RootSystem::half_sum_of_coroots(const std::vector<bool>& selected) const {
  Coweight sum = zero();
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (selected.at(k)) sum += roots_[k].coroot;
  for (std::size_t j = 0; j < rank_; ++j) {
    if (sum[j] % 2 != 0) {
      throw NonIntegralCoweight("half-sum of coroots " + sum.to_string() +
                                "/2 is not in the coweight lattice");
    }
    sum[j] /= 2;
  }
  return sum;
}

Coweight RootSystem::rho() const {
  return half_sum_of_coroots(std::vector<bool>(roots_.size(), true));
}

int RootSystem::two_rho_pairing(const Coweight& lambda) const {
  int s = 0;
  for (const auto& r : roots_) s += pairing(r.simple_coeffs, lambda);
  return s;
}

RootSystem build_root_system(const CartanType& t) { return RootSystem::build(t); }

Coweight reflect(const RootSystem& rs, std::size_t i, const Coweight& mu) {
  return rs.reflect(i, mu);
}

Coweight rho(const RootSystem& rs) { return rs.rho(); }

// ---------------------------------------------------------------------------

namespace {

std::vector<int> simple_matrix(const RootSystem& rs, std::size_t i) {
  const std::size_t n = rs.rank();
  std::vector<int> m(n * n, 0);
  for (std::size_t r = 0; r < n; ++r) m[r * n + r] = 1;
  for (std::size_t r = 0; r < n; ++r) m[r * n + i] -= rs.cartan(r, i);
  return m;
}

std::vector<int> matmul(const std::vector<int>& a, const std::vector<int>& b, std::size_t n) {
  std::vector<int> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const int aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

}  // namespace

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::size_t max_order) {
  WeylGroup g;
  g.rs_ = &rs;
  const std::size_t n = rs.rank();
  std::vector<std::vector<int>> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(simple_matrix(rs, i));

  WeylElement e;
  e.action.assign(n * n, 0);
  for (std::size_t r = 0; r < n; ++r) e.action[r * n + r] = 1;
  g.by_action_[e.action] = 0;
  g.elements_.push_back(e);

  for (std::size_t k = 0; k < g.elements_.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> m = matmul(g.elements_[k].action, gens[i], n);
      if (g.by_action_.count(m)) continue;
      if (g.elements_.size() >= max_order) {
        throw GroupTooLarge("Weyl group of " + rs.type().to_string() + " exceeds " +
                            std::to_string(max_order) + " elements");
      }
      WeylElement w;
      w.index = g.elements_.size();
      w.reduced_word = g.elements_[k].reduced_word;
      w.reduced_word.push_back(static_cast<int>(i));
      w.length = g.elements_[k].length + 1;
      w.action = std::move(m);
      g.by_action_[w.action] = w.index;
      g.elements_.push_back(std::move(w));
    }
  }

  const std::size_t size = g.elements_.size();
  g.left_.assign(n, std::vector<std::size_t>(size));
  g.right_.assign(n, std::vector<std::size_t>(size));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t w = 0; w < size; ++w) {
      g.right_[i][w] = g.by_action_.at(matmul(g.elements_[w].action, gens[i], n));
      g.left_[i][w] = g.by_action_.at(matmul(gens[i], g.elements_[w].action, n));
    }
    g.simple_.push_back(g.right_[i][0]);
  }
  g.inverse_.resize(size);
  for (std::size_t w = 0; w < size; ++w) {
    std::size_t x = 0;
    const auto& word = g.elements_[w].reduced_word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = g.right_[*it][x];
    g.inverse_[w] = x;
  }
  g.longest_ = size - 1;  // BFS order: the unique element of maximal length comes last
  return g;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  std::size_t x = a;
  for (int i : elements_[b].reduced_word) x = right_[i][x];
  return x;
}

std::size_t WeylGroup::from_word(std::span<const int> word) const {
  std::size_t x = 0;
  for (int i : word) {
    if (i < 0 || static_cast<std::size_t>(i) >= rs_->rank()) {
      throw Error("simple reflection index out of range");
    }
    x = right_[static_cast<std::size_t>(i)][x];
  }
  return x;
}

bool WeylGroup::is_reduced(std::span<const int> word) const {
  return elements_[from_word(word)].length == static_cast<int>(word.size());
}

Coweight WeylGroup::act(std::size_t w, const Coweight& mu) const {
  const std::size_t n = rs_->rank();
  const auto& m = elements_[w].action;
  Coweight r = Coweight::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    int s = 0;
    for (std::size_t j = 0; j < n; ++j) s += m[i * n + j] * mu[j];
    r[i] = s;
  }
  return r;
}

std::vector<std::vector<int>> WeylGroup::reduced_words(std::size_t w) const {
  // Words of w are i . (words of s_i w) over the left descents i.
  if (elements_[w].length == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < rs_->rank(); ++i) {
    std::size_t v = left_[i][w];
    if (elements_[v].length >= elements_[w].length) continue;
    for (auto& tail : reduced_words(v)) {
      std::vector<int> word{static_cast<int>(i)};
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

int WeylGroup::count_inversions(std::size_t w) const {
  const auto& word = elements_[w].reduced_word;
  int count = 0;
  for (const auto& root : rs_->positive_roots()) {
    // w^{-1} = s_{ik} ... s_{i1}: apply s_{i1} first.
    std::vector<int> beta = root.simple_coeffs;
    for (int i : word) beta = rs_->reflect_root(static_cast<std::size_t>(i), beta);
    if (std::any_of(beta.begin(), beta.end(), [](int c) { return c < 0; })) ++count;
  }
  return count;
}

WeylGroup enumerate_weyl(const RootSystem& rs, std::size_t max_order) {
  return WeylGroup::enumerate(rs, max_order);
}

const WeylElement& longest_element(const WeylGroup& W) { return W[W.longest()]; }

}  // namespace iwahori
