#include <doctest.h>

#include "iwahori/verify.hpp"

using namespace iwahori;

namespace {

bool suite_fails(Suite s, const char* type, Mutation m) {
  const auto d = WeylDatum::make(CartanType::parse(type));
  VerifyOptions o;
  o.mutation = m;
  o.box_radius = 1;
  for (const auto& r : run_suite(s, *d, o)) {
    if (!r.passed) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("names round trip") {
  for (Suite s : all_suites()) CHECK(parse_suite(to_string(s)) == s);
  for (Mutation m : all_mutations()) CHECK(parse_mutation(to_string(m)) == m);
  CHECK(parse_mutation("none") == Mutation::None);
  CHECK_THROWS(parse_suite("nope"));
  CHECK_THROWS(parse_mutation("nope"));
}

TEST_CASE("test box") {
  CHECK(test_box(1, 2).size() == 5);
  CHECK(test_box(2, 2).size() == 25);
  CHECK(test_box(3, 2).size() == 125);
  CHECK(test_box(4, 2).size() == 200);
  CHECK(test_box(3, 2, 50).size() == 50);
  const auto box = test_box(2, 1);
  CHECK(box.front() == Coweight{0, 0});
  CHECK(box[1] == Coweight{-1, -1});
  CHECK(box.back() == Coweight{1, 1});
  CHECK(test_box(4, 2) == test_box(4, 2));
}

TEST_CASE("every suite passes on A2 and B2") {
  for (const std::string type : {"A2", "B2"}) {
    const auto d = WeylDatum::make(CartanType::parse(type));
    VerifyOptions o;
    o.box_radius = 1;
    for (Suite s : all_suites()) {
      if (!suite_applies(s, *d)) continue;
      for (const auto& r : run_suite(s, *d, o)) {
        CAPTURE(to_json(r).dump());
        CHECK(r.passed);
        CHECK(r.count > 0);
      }
    }
  }
}

TEST_CASE("suite applicability") {
  const auto a2 = WeylDatum::make(CartanType::parse("A2"));
  const auto b2 = WeylDatum::make(CartanType::parse("B2"));
  const auto c2 = WeylDatum::make(CartanType::parse("C2"));
  CHECK(!suite_applies(Suite::Shalika, *a2));
  CHECK(suite_applies(Suite::Shalika, *b2));
  CHECK(!suite_applies(Suite::BesselIntertwiner, *c2));
  CHECK(suite_applies(Suite::OperatorAlgebra, *b2));
  CHECK(!suite_applies(Suite::OperatorAlgebra, *WeylDatum::make(CartanType::parse("A3"))));
}

TEST_CASE("character filter") {
  const auto b2 = WeylDatum::make(CartanType::parse("B2"));
  VerifyOptions o;
  o.box_radius = 1;
  const auto rs = run_suite(Suite::Quadratic, *b2, o, "neg-long");
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].character == "neg-long");
  CHECK(run_suite(Suite::Quadratic, *b2, o).size() == 4);
}

TEST_CASE("each mutation breaks its target suite") {
  CHECK(suite_fails(Suite::Quadratic, "A1", Mutation::QuadraticQSquared));
  CHECK(suite_fails(Suite::Braid, "A2", Mutation::BraidMixedCharacter));
  CHECK(suite_fails(Suite::Bernstein, "A1", Mutation::BernsteinSignFlip));
  CHECK(suite_fails(Suite::DeformedDemazure, "A1", Mutation::DeformedDemazureSwap));
  CHECK(suite_fails(Suite::RhoPairing, "A1", Mutation::RhoDropRoot));
  CHECK(suite_fails(Suite::Theorem, "A1", Mutation::DropSignCorrection));
  CHECK(suite_fails(Suite::OperatorIdentity, "A2", Mutation::DropSignCorrection));
  for (Mutation m : all_mutations()) {
    const char* type = m == Mutation::BraidMixedCharacter ? "A2" : "A1";
    CAPTURE(to_string(m));
    CHECK(suite_fails(target_suite(m), type, m));
  }
}

TEST_CASE("without the sign correction the A1 witness is 1 + q against -(1 + q)") {
  const auto d = WeylDatum::make(CartanType::parse("A1"));
  VerifyOptions o;
  o.mutation = Mutation::DropSignCorrection;
  const HeckeCharacter triv = HeckeCharacter::by_name(d->rs(), "triv");
  const CheckResult r = verify_theorem(*d, triv, o);
  CHECK(!r.passed);
  const auto j = to_json(r);
  CHECK(j["status"] == "fail");
  REQUIRE(j.contains("witness"));
  CHECK(j["witness"]["lambda"] == nlohmann::json::array({0}));
  CHECK(j["witness"]["lhs"] == "(q + 1)");
  CHECK(j["witness"]["rhs"] == "(-q - 1)");
}

TEST_CASE("a negative control that cannot bite on even N") {
  // B2 has N = 4, so dropping (-1)^N changes nothing.
  CHECK(!suite_fails(Suite::Theorem, "B2", Mutation::DropSignCorrection));
}

TEST_CASE("report records") {
  const auto d = WeylDatum::make(CartanType::parse("A2"));
  VerifyOptions o;
  const auto rs = run_suite(Suite::CasselmanShalika, *d, o);
  REQUIRE(rs.size() == 1);
  const auto j = to_json(rs[0]);
  CHECK(j["identity"] == "casselman-shalika");
  CHECK(j["type"] == "A2");
  CHECK(j["status"] == "pass");
  CHECK(!j.contains("witness"));
  CHECK(j["info"]["unit"] == 1);
}

}
