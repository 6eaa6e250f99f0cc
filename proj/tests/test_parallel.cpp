#include <doctest.h>

#include <stdexcept>

#include "iwahori/formulas.hpp"
#include "iwahori/parallel.hpp"
#include "iwahori/verify.hpp"

using namespace iwahori;

TEST_SUITE("parallel") {

TEST_CASE("parallel_map keeps index order") {
  auto sq = [](std::size_t k) { return static_cast<long>(k * k); };
  const auto a = parallel_map(1000, sq, Backend::Serial);
  const auto b = parallel_map(1000, sq, Backend::OpenMP);
  CHECK(a == b);
  CHECK(b[999] == 998001);
  CHECK(parallel_map(0, sq, Backend::OpenMP).empty());
}

TEST_CASE("the exception from the smallest index wins") {
  for (Backend be : {Backend::Serial, Backend::OpenMP}) {
    try {
      parallel_map(
          100,
          [](std::size_t k) -> int {
            if (k == 17 || k == 60) throw std::runtime_error(std::to_string(k));
            return 0;
          },
          be);
      FAIL("expected a throw");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "17");
    }
  }
}

TEST_CASE("serial and OpenMP verification reports are identical") {
  const auto d = WeylDatum::make(CartanType::parse("B2"));
  for (Mutation m : {Mutation::None, Mutation::BernsteinSignFlip}) {
    VerifyOptions serial, omp;
    serial.backend = Backend::Serial;
    omp.backend = Backend::OpenMP;
    serial.mutation = omp.mutation = m;
    for (Suite s : {Suite::Theorem, Suite::Bernstein, Suite::Braid}) {
      const auto a = run_suite(s, *d, serial);
      const auto b = run_suite(s, *d, omp);
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(to_json(a[k]).dump() == to_json(b[k]).dump());
    }
  }
}

TEST_CASE("thread count does not change results") {
  const auto d = WeylDatum::make(CartanType::parse("A2"));
  const HeckeCharacter sign = HeckeCharacter::by_name(d->rs(), "sign");
  const auto lambdas = dominant_up_to_height(2, 3);
  auto eval = [&](std::size_t k) { return theorem_lhs(*d, sign, lambdas[k]).to_string(); };
  set_jobs(1);
  const auto one = parallel_map(lambdas.size(), eval);
  set_jobs(4);
  const auto four = parallel_map(lambdas.size(), eval);
  set_jobs(0);
  CHECK(one == four);
  CHECK(max_jobs() >= 1);
}

}
