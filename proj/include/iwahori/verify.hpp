#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "iwahori/formulas.hpp"
#include "iwahori/parallel.hpp"

namespace iwahori {

/// Deliberate defects used as negative controls, each aimed at one suite.
enum class Mutation {
  None,
  DropSignCorrection,    // Omega without (-1)^{l(w_0)}
  QuadraticQSquared,     // generators with value q act by q^2
  BraidMixedCharacter,   // -1 on s_1 only, ignoring odd bonds
  BernsteinSignFlip,     // (q - 1) in place of (1 - q)
  DeformedDemazureSwap,  // the two cases of 1 + T'_i exchanged
  RhoDropRoot,           // one minus root left out of rho_eps
};

const char* to_string(Mutation m);
/// Dashed names, e.g. "drop-sign-correction".  Throws ParseError.
Mutation parse_mutation(const std::string& name);
std::vector<Mutation> all_mutations();

enum class Suite {
  Quadratic,
  Braid,
  Bernstein,
  DeformedDemazure,
  RhoPairing,
  Intertwiner,
  BesselIntertwiner,
  FrakturClosedForm,
  DemazureRelations,
  OperatorIdentity,
  Theorem,
  QZero,
  HighestWeight,
  Symmetry,
  OperatorAlgebra,
  CasselmanShalika,
  Macdonald,
  Shalika,
};

const char* to_string(Suite s);
Suite parse_suite(const std::string& name);
std::vector<Suite> all_suites();
/// The suite a mutation is meant to break.
Suite target_suite(Mutation m);

struct VerifyOptions {
  int box_radius = 2;
  std::size_t box_cap = 200;
  Mutation mutation = Mutation::None;
  Backend backend = Backend::OpenMP;
};

struct CheckResult {
  std::string identity;
  std::string type;
  std::string character;  // "-" when the identity does not involve one
  bool passed = true;
  std::size_t count = 0;
  nlohmann::json witness;  // null unless failed
  nlohmann::json info;     // optional extra report, e.g. a proportionality unit
};

nlohmann::json to_json(const CheckResult& r);

/// Coweights with every coordinate in [-radius, radius].  When there are more
/// than cap of them, every k-th one in lex order is kept (k = total / cap,
/// rounded so that exactly cap remain).  The result is ordered by max-norm,
/// lex within equal norm.
std::vector<Coweight> test_box(std::size_t rank, int radius, std::size_t cap = 200);

CheckResult verify_quadratic(const WeylDatum& d, const HeckeCharacter& eps, const VerifyOptions& o);
CheckResult verify_braid(const WeylDatum& d, const HeckeCharacter& eps, const VerifyOptions& o);
CheckResult verify_bernstein(const WeylDatum& d, const HeckeCharacter& eps, const VerifyOptions& o);
CheckResult verify_deformed_demazure(const WeylDatum& d, const HeckeCharacter& eps,
                                     const VerifyOptions& o);
CheckResult verify_rho_pairing(const WeylDatum& d, const HeckeCharacter& eps, const VerifyOptions& o);
CheckResult verify_intertwiner(const WeylDatum& d, const HeckeCharacter& eps, const VerifyOptions& o);
/// Type B, neg-long character: constants fixed by the length of the simple root.
CheckResult verify_bessel_intertwiner(const WeylDatum& d, const VerifyOptions& o);
CheckResult verify_fraktur_closed_form(const WeylDatum& d, const HeckeCharacter& eps,
                                       const VerifyOptions& o);
CheckResult verify_demazure_relations(const WeylDatum& d, const VerifyOptions& o);
/// sum_w T'_w (pi^mu) = D_(-1) Omega(D_(q) pi^mu) on the box.
CheckResult verify_operator_identity(const WeylDatum& d, const HeckeCharacter& eps,
                                     const VerifyOptions& o);
/// theorem_lhs = theorem_rhs for lambda in the box.
CheckResult verify_theorem(const WeylDatum& d, const HeckeCharacter& eps, const VerifyOptions& o);
/// At q = 0 the sum of conjugated operators is the Demazure operator of w_0.
CheckResult verify_q_zero(const WeylDatum& d, const HeckeCharacter& eps, const VerifyOptions& o);
/// Demazure and Weyl characters agree for dominant lambda of height <= 4.
CheckResult verify_highest_weight(const WeylDatum& d, const VerifyOptions& o);
/// s_i o X = X and X o s_i = -X o pi^{a_i} for X = D_(-1)^-1 (sum T'_w) D_(q)^-1.
CheckResult verify_symmetry(const WeylDatum& d, const HeckeCharacter& eps, const VerifyOptions& o);
/// The operator identity as an equality of WeylOperator values.
CheckResult verify_operator_algebra(const WeylDatum& d, const HeckeCharacter& eps,
                                    const VerifyOptions& o);
CheckResult verify_casselman_shalika(const WeylDatum& d, const VerifyOptions& o, int height = 3);
CheckResult verify_macdonald(const WeylDatum& d, const VerifyOptions& o, int height = 3);
CheckResult verify_shalika(const WeylDatum& d, const VerifyOptions& o, int height = 2);

/// Whether a suite applies to the type at all (e.g. Shalika needs type B).
bool suite_applies(Suite s, const WeylDatum& d);
/// Runs one suite on one type, once per character where relevant.  A
/// non-empty character name restricts the per-character suites to it.
std::vector<CheckResult> run_suite(Suite s, const WeylDatum& d, const VerifyOptions& o,
                                   const std::string& character = "");

}  // namespace iwahori
