#pragma once

#include "dunkl/singular.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dunkl {

struct VerifyOptions {
  /// Monomial degree bound for the defining, oracle and kernel-agreement checks.
  int max_degree = 6;
  std::uint32_t seed = 42;
  /// Number of random parameter points in the oracle suite.
  int oracle_points = 5;
  /// Restricts the singular suite to one value of m; 0 runs the default range.
  int m = 0;
};

const std::vector<std::string>& suite_names();

/// Symbolic check of T V = V d/dz and Tbar V = V d/dzbar, s = 1..3.
VerificationReport verify_defining(const VerifyOptions& opts);
/// Specialized closed form against the linear-algebra oracle at seeded points.
VerificationReport verify_oracle(const VerifyOptions& opts);
/// Hypergeometric, harmonic, inner-product and kernel identities.
VerificationReport verify_identities(const VerifyOptions& opts);
/// Everything at the singular line k0 + k1 = -m.
VerificationReport verify_singular(const VerifyOptions& opts);

/// Runs a suite by name ("all" runs every suite). Throws std::invalid_argument
/// for an unknown name.
VerificationReport run_suite(const std::string& name, const VerifyOptions& opts);

/// Short description of the first coefficient where x and y differ; empty when equal.
std::string difference_witness(const MultiPoly& x, const MultiPoly& y);

}  // namespace dunkl
