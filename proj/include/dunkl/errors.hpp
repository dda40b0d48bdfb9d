#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// A denominator linear form vanishes at the requested point.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// A denominator built from the given parameters is identically zero.
class DegenerateDenominator : public std::domain_error {
 public:
  explicit DegenerateDenominator(const std::string& what) : std::domain_error(what) {}
};

/// The point handed to the reflection-sum evaluator lies too close to a mirror.
class MirrorProximityError : public std::domain_error {
 public:
  explicit MirrorProximityError(const std::string& what) : std::domain_error(what) {}
};

/// Parameters in the singular set, where the intertwining operator is undefined.
class SingularParameterError : public std::domain_error {
 public:
  explicit SingularParameterError(const std::string& what) : std::domain_error(what) {}
};

/// The linear system defining V at a specialized point has no solution.
class InconsistentSystemError : public std::runtime_error {
 public:
  explicit InconsistentSystemError(const std::string& what) : std::runtime_error(what) {}
};

/// A grouped term still carries a pole at epsilon = 0.
class UnpairedPoleError : public std::runtime_error {
 public:
  explicit UnpairedPoleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dunkl
