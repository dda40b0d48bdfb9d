#pragma once

#include "dunkl/multipoly.hpp"
#include "dunkl/param_rat.hpp"

#include <random>
#include <vector>

namespace dunkl::testing {

/// Random rational p/q with |p| <= span and 1 <= q <= span.
inline ExactScalar random_rational(std::mt19937& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  ExactScalar x(num(rng), den(rng));
  x.canonicalize();
  return x;
}

/// Parameter points that avoid every pole the library can produce at small
/// degree: noninteger with small denominators coprime to the group sizes used.
inline std::vector<std::pair<ExactScalar, ExactScalar>> generic_points() {
  return {{ExactScalar(3, 7), ExactScalar(5, 11)},
          {ExactScalar(-2, 13), ExactScalar(9, 17)},
          {ExactScalar(13, 19), ExactScalar(-4, 23)}};
}

/// Compares two symbolic values by exact equality and, independently, by
/// specializing both at a few generic points.
inline bool same_everywhere(const ParamRat& x, const ParamRat& y) {
  if (!(x == y)) return false;
  for (const auto& [k0, k1] : generic_points()) {
    if (x.specialize(k0, k1) != y.specialize(k0, k1)) return false;
  }
  return true;
}

}  // namespace dunkl::testing
