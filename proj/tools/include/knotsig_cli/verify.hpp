#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "knotsig/algebra.hpp"
#include "knotsig/braid.hpp"
#include "knotsig/maslov.hpp"

namespace knotsig::cli {

using Rng = std::mt19937_64;

struct VerifyConfig {
  int trials = 100;
  std::uint64_t seed = 7;
  int precision = kDefaultPrecision;
  double tol = kDefaultTolerance;
  int jobs = 1;
};

struct SuiteReport {
  std::string name;
  int trials = 0;
  int passed = 0;
  std::optional<std::string> counterexample;  // first failing trial
  // Random instances redrawn because a form sat on the tolerance wall
  // (PrecisionExhausted); they are neither passes nor failures.
  int resampled = 0;
  bool ok() const { return passed == trials; }
};

// Random inputs. All draws come from the caller's generator so a fixed seed
// gives the same instances regardless of how trials are later scheduled.

// Signed colors in +-{1..mu}, every color used at least once.
Coloring random_coloring(Rng& rng, int n, int mu, bool positive = false);
// Random letters of length in [min_len, max_len], resampled until the word is
// an endomorphism of c.
BraidWord random_endomorphism(Rng& rng, const Coloring& c, int min_len, int max_len);
// Orders in [2, max_order], pairwise coprime and coprime to ell(c); numerators
// coprime to the orders. Empty when no such point exists.
std::optional<TorusPoint> random_admissible_point(Rng& rng, const Coloring& c, int max_order);
// Any point with orders in [2, max_order].
TorusPoint random_point(Rng& rng, int mu, int max_order);

// Isotropic triple in cx64 for xi = P^T (i diag(s)) conj(P); the three subspaces reuse
// a small set of phases so that coincidences and intersections are common.
IsotropicTriple<cx64> random_isotropic_triple(Rng& rng, int ambient);

struct UnitaryPair {
  Mat<cx64> xi, g1, g2;
};
// Cayley transforms of random xi-Hermitian generators, with fixed blocks and
// repeated factors mixed in so that Im(g - 1) is often proper.
UnitaryPair random_unitary_pair(Rng& rng, int n);

SuiteReport verify_theorem(const VerifyConfig& cfg);
SuiteReport verify_oracle(const VerifyConfig& cfg);
SuiteReport verify_maslov_definitions(const VerifyConfig& cfg);
SuiteReport verify_meyer_definitions(const VerifyConfig& cfg);
SuiteReport verify_unitarity(const VerifyConfig& cfg);
SuiteReport verify_forms(const VerifyConfig& cfg);

// suite in {theorem, oracle, maslov-defs, unitarity, forms, all}
std::vector<SuiteReport> run_suites(const std::string& suite, const VerifyConfig& cfg);

}  // namespace knotsig::cli
