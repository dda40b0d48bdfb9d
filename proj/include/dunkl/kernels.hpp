#pragma once

#include "dunkl/dunkl.hpp"
#include "dunkl/multipoly.hpp"

#include <vector>

namespace dunkl {

/// Reproducing kernel of the harmonic space of degree N, as a polynomial in
/// (z, zbar, w, wbar). Cached per (s, N).
MultiPoly poisson_p(const GroupParam& g, int N);

/// P_{ns} through the biorthogonal pair {f_n(z^s)} and {z^s f_{n-1}(z^s)},
/// n >= 1; equal to poisson_p(g, n*s).
MultiPoly poisson_p_biorthogonal(const GroupParam& g, int n);

/// One summand of the kernel series: 2^{-n} (z zbar w wbar)^j P_{n-2j} / (j! (gamma0)_{n-j}).
MultiPoly kernel_term(const GroupParam& g, int n, int j);
std::vector<MultiPoly> kernel_terms(const GroupParam& g, int n);
MultiPoly kernel_k(const GroupParam& g, int n);

/// P_n rebuilt from the kernels K_{n-2j}.
MultiPoly p_from_k(const GroupParam& g, int n);

/// Weight of eta_{n-2j} in xi_n, (gamma0)_n / (j! (2-n-gamma0)_j).
ParamRat xi_weight(const Affine& gamma0, int n, int j);
/// Weight of xi_{n-2j} in eta_n, 1 / (j! (gamma0)_{n-j}).
ParamRat eta_weight(const Affine& gamma0, int n, int j);

template <class Vec>
std::vector<Vec> xi_from_eta(const std::vector<Vec>& eta, const Affine& gamma0) {
  std::vector<Vec> xi;
  for (int n = 0; n < static_cast<int>(eta.size()); ++n) {
    Vec acc = eta[static_cast<std::size_t>(n)] * xi_weight(gamma0, n, 0);
    for (int j = 1; 2 * j <= n; ++j) acc += eta[static_cast<std::size_t>(n - 2 * j)] * xi_weight(gamma0, n, j);
    xi.push_back(std::move(acc));
  }
  return xi;
}

template <class Vec>
std::vector<Vec> eta_from_xi(const std::vector<Vec>& xi, const Affine& gamma0) {
  std::vector<Vec> eta;
  for (int n = 0; n < static_cast<int>(xi.size()); ++n) {
    Vec acc = xi[static_cast<std::size_t>(n)] * eta_weight(gamma0, n, 0);
    for (int j = 1; 2 * j <= n; ++j) acc += xi[static_cast<std::size_t>(n - 2 * j)] * eta_weight(gamma0, n, j);
    eta.push_back(std::move(acc));
  }
  return eta;
}

/// True when eta_from_xi(xi_from_eta(seq)) == seq exactly.
template <class Vec>
bool inversion_roundtrip(const std::vector<Vec>& seq, const Affine& gamma0) {
  return eta_from_xi(xi_from_eta(seq, gamma0), gamma0) == seq;
}

/// V(z^{n-m} zbar^m) read off from the coefficient of w^m wbar^{n-m} in K_n.
MultiPoly v_from_kernel(const GroupParam& g, int n, int m);

}  // namespace dunkl
