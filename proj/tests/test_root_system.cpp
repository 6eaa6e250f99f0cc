#include <doctest.h>

#include <set>

#include "iwahori/errors.hpp"
#include "iwahori/root_system.hpp"
#include "oracles.hpp"

using namespace iwahori;

namespace {

const char* kTypes[] = {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2"};

}  // namespace

TEST_SUITE("root_system") {

TEST_CASE("group orders match the product of the degrees") {
  for (const std::string name : kTypes) {
    CAPTURE(name);
    const CartanType t = CartanType::parse(name);
    const RootSystem rs = RootSystem::build(t);
    const WeylGroup W = WeylGroup::enumerate(rs);
    std::size_t order = 1, n_pos = 0;
    for (int d : oracle::degrees(t)) {
      order *= static_cast<std::size_t>(d);
      n_pos += static_cast<std::size_t>(d - 1);
    }
    CHECK(W.size() == order);
    CHECK(rs.num_positive_roots() == n_pos);
    CHECK(static_cast<std::size_t>(W[W.longest()].length) == n_pos);
  }
}

TEST_CASE("group size bound") {
  const RootSystem d4 = RootSystem::build(CartanType::parse("D4"));
  CHECK(WeylGroup::enumerate(d4).size() == 192);
  CHECK_THROWS_AS(WeylGroup::enumerate(d4, 100), GroupTooLarge);
  const RootSystem f4 = RootSystem::build(CartanType::parse("F4"));
  CHECK_THROWS_AS(WeylGroup::enumerate(f4), GroupTooLarge);
  CHECK(WeylGroup::enumerate(f4, 1200).size() == 1152);
}

TEST_CASE("type strings") {
  CHECK(CartanType::parse("b3") == CartanType{'B', 3});
  CHECK(CartanType::parse("G2").to_string() == "G2");
  for (const std::string bad : {"B1", "C1", "D2", "G3", "F3", "E6"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(CartanType::parse(bad), InadmissibleType);
  }
  for (const std::string bad : {"", "X2", "A", "2A", "A-1", "Ax"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(CartanType::parse(bad), Error);
  }
}

TEST_CASE("Cartan conventions") {
  // B2: alpha_1 long, alpha_2 short; <alpha_1, alpha_2^vee> = -2.
  const RootSystem b2 = RootSystem::build(CartanType::parse("B2"));
  CHECK(b2.cartan(0, 1) == -2);
  CHECK(b2.cartan(1, 0) == -1);
  CHECK(b2.simple_length(0) == LengthClass::Long);
  CHECK(b2.simple_length(1) == LengthClass::Short);
  CHECK(b2.simple_coroot(0) == Coweight{2, -1});
  CHECK(b2.simple_coroot(1) == Coweight{-2, 2});
  CHECK(b2.braid_order(0, 1) == 4);
  const RootSystem g2 = RootSystem::build(CartanType::parse("G2"));
  CHECK(g2.braid_order(0, 1) == 6);
  CHECK(!g2.simply_laced());
  const RootSystem a3 = RootSystem::build(CartanType::parse("A3"));
  CHECK(a3.braid_order(0, 2) == 2);
  CHECK(a3.braid_order(1, 2) == 3);
}

TEST_CASE("simple reflections permute the other positive roots") {
  for (const std::string name : kTypes) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::build(CartanType::parse(name));
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      std::set<int> image;
      for (std::size_t b = 0; b < rs.num_positive_roots(); ++b) {
        if (b == i) continue;
        const auto r = rs.reflect_root(i, rs.positive_roots()[b].simple_coeffs);
        for (int c : r) CHECK(c >= 0);
        bool neg = false;
        const int idx = rs.find_root(r, &neg);
        CHECK(idx >= 0);
        CHECK(!neg);
        CHECK(idx != static_cast<int>(i));
        image.insert(idx);
      }
      CHECK(image.size() == rs.num_positive_roots() - 1);
    }
  }
}

TEST_CASE("rho pairs to one with every simple root") {
  for (const std::string name : kTypes) {
    const RootSystem rs = RootSystem::build(CartanType::parse(name));
    const Coweight r = rs.rho();
    for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(r[i] == 1);
    std::vector<bool> all(rs.num_positive_roots(), true);
    CHECK(rs.half_sum_of_coroots(all) == r);
  }
}

TEST_CASE("reduced words of the longest element") {
  // Counts of reduced words of w_0.
  const std::pair<const char*, std::size_t> cases[] = {
      {"A1", 1}, {"A2", 2}, {"A3", 16}, {"B2", 2}, {"G2", 2}, {"B3", 42}};
  for (const auto& [name, count] : cases) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::build(CartanType::parse(name));
    const WeylGroup W = WeylGroup::enumerate(rs);
    const auto words = W.reduced_words(W.longest());
    CHECK(words.size() == count);
    for (const auto& w : words) {
      CHECK(W.is_reduced(w));
      CHECK(W.from_word(w) == W.longest());
    }
  }
}

TEST_CASE("stored words are reduced and closed under prefixes and suffixes") {
  for (const std::string name : kTypes) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::build(CartanType::parse(name));
    const WeylGroup W = WeylGroup::enumerate(rs);
    std::set<std::vector<int>> stored;
    for (const auto& e : W.elements()) stored.insert(e.reduced_word);
    for (const auto& e : W.elements()) {
      const auto& w = e.reduced_word;
      CHECK(static_cast<int>(w.size()) == e.length);
      CHECK(W.count_inversions(e.index) == e.length);
      CHECK(W.from_word(w) == e.index);
      for (std::size_t k = 0; k <= w.size(); ++k) {
        CHECK(stored.count(std::vector<int>(w.begin(), w.begin() + static_cast<long>(k))) == 1);
        CHECK(stored.count(std::vector<int>(w.begin() + static_cast<long>(k), w.end())) == 1);
      }
    }
  }
}

TEST_CASE("group laws on random words") {
  oracle::Lcg g(11);
  for (const std::string name : kTypes) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::build(CartanType::parse(name));
    const WeylGroup W = WeylGroup::enumerate(rs);
    const int n = static_cast<int>(rs.rank());
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> u, v;
      for (int k = g.range(0, 8); k > 0; --k) u.push_back(g.range(0, n - 1));
      for (int k = g.range(0, 8); k > 0; --k) v.push_back(g.range(0, n - 1));
      std::vector<int> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      const std::size_t a = W.from_word(u), b = W.from_word(v);
      CHECK(W.multiply(a, b) == W.from_word(uv));
      CHECK(W.multiply(a, W.inverse(a)) == W.identity());
      const Coweight mu = oracle::random_coweight(g, rs.rank(), 3);
      Coweight seq = mu;
      for (auto it = u.rbegin(); it != u.rend(); ++it) seq = rs.reflect(static_cast<std::size_t>(*it), seq);
      CHECK(W.act(a, mu) == seq);
      // Lengths: l(uv) <= l(u) + l(v), parity is multiplicative.
      CHECK(W[W.multiply(a, b)].length <= W[a].length + W[b].length);
      CHECK(W[W.multiply(a, b)].sign() == W[a].sign() * W[b].sign());
      CHECK(W.is_reduced(uv) == (static_cast<int>(uv.size()) == W[W.from_word(uv)].length));
    }
  }
}

TEST_CASE("left and right multiplication tables") {
  const RootSystem rs = RootSystem::build(CartanType::parse("B3"));
  const WeylGroup W = WeylGroup::enumerate(rs);
  for (std::size_t w = 0; w < W.size(); ++w) {
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      CHECK(W.left_mult(i, w) == W.multiply(W.simple(i), w));
      CHECK(W.right_mult(w, i) == W.multiply(w, W.simple(i)));
      CHECK(std::abs(W[W.left_mult(i, w)].length - W[w].length) == 1);
    }
  }
}

TEST_CASE("coweight parsing") {
  CHECK(parse_coweight("1, -2,0", 3) == Coweight{1, -2, 0});
  CHECK(Coweight{1, -2}.to_string() == "[1,-2]");
  CHECK_THROWS_AS(parse_coweight("1,2", 3), ParseError);
  CHECK_THROWS_AS(parse_coweight("1,,2", 3), ParseError);
  CHECK_THROWS_AS(parse_coweight("1,a,2", 3), ParseError);
}

}
