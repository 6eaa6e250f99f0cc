#include <doctest.h>

#include "iwahori/weyl_operator.hpp"
#include "oracles.hpp"

using namespace iwahori;

TEST_SUITE("weyl_operator") {

TEST_CASE("group elements compose like the group") {
  const auto d = WeylDatum::make(CartanType::parse("B2"));
  const WeylGroup& W = d->W();
  for (std::size_t a = 0; a < W.size(); ++a) {
    for (std::size_t b = 0; b < W.size(); ++b) {
      CHECK(WeylOperator::element(W, a) * WeylOperator::element(W, b) ==
            WeylOperator::element(W, W.multiply(a, b)));
    }
  }
}

TEST_CASE("operators act like the polynomial routines") {
  oracle::Lcg g(41);
  for (const std::string name : {"A2", "B2"}) {
    const auto d = WeylDatum::make(CartanType::parse(name));
    const WeylGroup& W = d->W();
    for (const auto& eps : HeckeCharacter::all(d->rs())) {
      for (std::size_t i = 0; i < d->rank(); ++i) {
        const WeylOperator dem = demazure_operator(W, i);
        const WeylOperator t = t_operator(W, eps, i);
        const WeylOperator ft = fraktur_operator(W, eps, i);
        for (int trial = 0; trial < 4; ++trial) {
          const GroupRingElem f = oracle::random_elem(g, d->rank(), 3, 2);
          CHECK(dem.apply(f).clear() == demazure(d->rs(), i, f));
          CHECK(t.apply(f).clear() == t_act(d->rs(), eps, i, f));
          CHECK(ft.apply(f).clear() == fraktur_t(d->rs(), eps, i, f));
        }
      }
    }
  }
}

TEST_CASE("Demazure operators are idempotent and satisfy the braid relation") {
  const auto d = WeylDatum::make(CartanType::parse("B2"));
  const WeylGroup& W = d->W();
  const WeylOperator d0 = demazure_operator(W, 0), d1 = demazure_operator(W, 1);
  CHECK(d0 * d0 == d0);
  CHECK(d1 * d1 == d1);
  CHECK(d0 * d1 * d0 * d1 == d1 * d0 * d1 * d0);
}

TEST_CASE("Hecke generators as operators") {
  for (const std::string name : {"A2", "B2"}) {
    const auto d = WeylDatum::make(CartanType::parse(name));
    const WeylGroup& W = d->W();
    const std::size_t n = d->rank();
    const WeylOperator qop =
        WeylOperator::multiplication(W, GroupRingElem::constant(n, CoeffQ::q_power(1)));
    const WeylOperator one = WeylOperator::identity(W);
    for (const auto& eps : HeckeCharacter::all(d->rs())) {
      const WeylOperator t0 = t_operator(W, eps, 0), t1 = t_operator(W, eps, 1);
      CHECK((t0 - qop) * (t0 + one) == WeylOperator(W));
      WeylOperator a = one, b = one;
      for (int k = 0; k < d->rs().braid_order(0, 1); ++k) {
        a = a * (k % 2 == 0 ? t0 : t1);
        b = b * (k % 2 == 0 ? t1 : t0);
      }
      CHECK(a == b);
    }
  }
}

TEST_CASE("sum of conjugated operators equals D_(-1) Omega D_(q)") {
  for (const std::string name : {"A1", "A2", "B2"}) {
    const auto d = WeylDatum::make(CartanType::parse(name));
    const WeylGroup& W = d->W();
    for (const auto& eps : HeckeCharacter::all(d->rs())) {
      CAPTURE(name);
      CAPTURE(eps.name());
      const WeylOperator lhs = fraktur_sum_operator(W, eps);
      const WeylOperator rhs = WeylOperator::multiplication(W, d_minus(d->rs(), eps)) *
                               omega_operator(*d) *
                               WeylOperator::multiplication(W, d_q(d->rs(), eps));
      CHECK(lhs == rhs);
      if (d->longest_length() % 2 == 1) {
        const WeylOperator bad = WeylOperator::multiplication(W, d_minus(d->rs(), eps)) *
                                 omega_operator(*d, OmegaOptions{false}) *
                                 WeylOperator::multiplication(W, d_q(d->rs(), eps));
        CHECK(!(lhs == bad));
      }
    }
  }
}

TEST_CASE("alternator operator") {
  const auto d = WeylDatum::make(CartanType::parse("A2"));
  const WeylOperator a = alternator_operator(d->W());
  CHECK(a.terms().size() == 6);
  CHECK(a.apply(GroupRingElem::monomial(d->rho())).clear() == d->weyl_denominator());
  for (std::size_t w = 0; w < d->W().size(); ++w) {
    const WeylOperator wa = WeylOperator::element(d->W(), w) * a;
    const int s = d->W()[w].sign();
    CHECK(wa == WeylOperator::multiplication(d->W(), GroupRingElem::constant(2, CoeffQ(s))) * a);
  }
}

}
