#pragma once

#include "dunkl/errors.hpp"
#include "dunkl/multipoly.hpp"

#include <complex>

namespace dunkl {

/// Selects the dihedral group I2(2s).
class GroupParam {
 public:
  explicit GroupParam(int s);
  int s() const { return s_; }
  /// s*k0 + s*k1 + 1
  Affine gamma0() const { return {s_, s_, 1}; }

 private:
  int s_;
};

MultiPoly apply_T(const MultiPoly& f, const GroupParam& g);
MultiPoly apply_Tbar(const MultiPoly& f, const GroupParam& g);

/// 4 T Tbar f
MultiPoly laplacian(const MultiPoly& f, const GroupParam& g);
bool is_harmonic(const MultiPoly& f, const GroupParam& g);

MultiPoly partial_z(const MultiPoly& f);
MultiPoly partial_zbar(const MultiPoly& f);

/// Evaluates f(z0, conj z0) with coefficients specialized at (k0, k1).
std::complex<double> eval_at(const MultiPoly& f, std::complex<double> z0, double k0, double k1);

/// Reflection-sum evaluation of T f at z0; floating point, for cross-checks only.
/// Throws MirrorProximityError if z0 is within 1e-6 of a mirror.
std::complex<double> definitional_eval_T(const MultiPoly& f, const GroupParam& g, std::complex<double> z0,
                                         double k0, double k1);
std::complex<double> definitional_eval_Tbar(const MultiPoly& f, const GroupParam& g, std::complex<double> z0,
                                            double k0, double k1);

}  // namespace dunkl
