#pragma once

#include "dunkl/param_rat.hpp"

#include <utility>
#include <vector>

namespace dunkl {

struct EParams {
  Affine a;
  Affine b;
  Affine c1;
  Affine c2;
};

/// The terminating sum
///   (1/(n! (c1+c2)_n)) sum_j ((-n)_j / j!) (a)_{n-j} (b)_j (c1)_j (c2)_{n-j}.
/// Throws DegenerateDenominator when (c1+c2)_n vanishes identically.
ParamRat e_fn(int n, const EParams& p);

/// Same value through the transformed series
///   ((a+c1)_n/n!) 3F2(-n, n+a+b+c1+c2-1, c1; a+c1, c1+c2; 1).
ParamRat e_fn_alt(int n, const EParams& p);

/// Truth of the two contiguity relations linking E_m(a,b;c,c+1),
/// E_m(a,b;c+1,c), E_{m+1}(a,b;c,c) and E_m(a,b;c+1,c+1).
std::pair<bool, bool> contiguity_check(int m, const Affine& a, const Affine& b, const Affine& c);

/// Coefficients of the Jacobi polynomial P_n^{(alpha,beta)}(t) in powers of
/// (1-t)/2, lowest first.
std::vector<ParamRat> jacobi_coeffs(int n, const Affine& alpha, const Affine& beta);

}  // namespace dunkl
