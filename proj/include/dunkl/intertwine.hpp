#pragma once

#include "dunkl/dunkl.hpp"
#include "dunkl/multipoly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dunkl {

/// Residue data of z^a zbar^b (a >= b) for the dihedral group of order 4s.
/// shifted: a - b = t mod s with 1 <= t < s, a = us + r + t, b = vs + r.
/// otherwise a = us + r, b = vs + r and t = 0.
struct MonomialCase {
  int a = 0;
  int b = 0;
  int s = 1;
  bool shifted = false;
  int t = 0;
  int u = 0;
  int v = 0;
  int r = 0;
};

/// Throws std::domain_error unless a >= b >= 0.
MonomialCase decompose(const GroupParam& g, int a, int b);

/// c(f_{u+v-2k}; u-k, v-k) in closed form.
ParamRat first_sum_coeff(int u, int v, int k);
/// c(f_{u+v+1-2k}; v-k, u-k+1) in closed form.
ParamRat second_sum_coeff(int u, int v, int k);

/// One summand of the expansion of V(z^a zbar^b), a >= b. series is 1 or 2
/// for the two sums of the shifted case and 1 otherwise.
struct VTerm {
  int series = 1;
  int k = 0;
  MultiPoly poly{2};
};

std::vector<VTerm> intertwine_terms(const GroupParam& g, int a, int b);

/// V(z^a zbar^b). Cached per (s, a, b).
MultiPoly intertwine_mono(const GroupParam& g, int a, int b);
/// V((z^a zbar^b + z^b zbar^a)/2) and V((z^a zbar^b - z^b zbar^a)/2) for
/// a = b mod s, a >= b.
MultiPoly intertwine_sym(const GroupParam& g, int a, int b);
MultiPoly intertwine_antisym(const GroupParam& g, int a, int b);
MultiPoly intertwine_poly(const GroupParam& g, const MultiPoly& f);

/// V of every monomial up to max_degree at fixed rational parameters,
/// obtained by solving the defining relations degree by degree.
/// Throws SingularParameterError for parameters on the known singular set
/// or where the solution is not unique, InconsistentSystemError when the
/// relations have no solution.
std::map<std::pair<int, int>, ScalarPoly> oracle_table(const GroupParam& g, int max_degree, const ExactScalar& k0,
                                                       const ExactScalar& k1);
ScalarPoly oracle_v(const GroupParam& g, const MultiPoly& f, const ExactScalar& k0, const ExactScalar& k1);

}  // namespace dunkl
