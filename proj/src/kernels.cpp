#include "dunkl/kernels.hpp"

#include "dunkl/cache.hpp"
#include "dunkl/harmonic.hpp"

#include <stdexcept>

namespace dunkl {

MultiPoly poisson_p(const GroupParam& g, int N) {
  if (N < 0) throw std::domain_error("negative degree");
  static SyncCache<std::pair<int, int>, MultiPoly> cache;
  return cache.get({g.s(), N}, [&] {
    if (N == 0) return MultiPoly::constant(ParamRat(1), 4);
    const int s = g.s();
    const int n = N / s;
    const int t = N % s;
    if (t != 0) {
      const MultiPoly f = f_of_power(n, Variant::Full, s);
      const MultiPoly half = f.embed_z().shift({t, 0, 0, t}) * f.embed_w_conj();
      return (half + half.conjugate_swap()) * lambda_const(n, Variant::Full);
    }
    MultiPoly out(4);
    for (Variant v : {Variant::Real, Variant::Imag}) {
      const ParamRat lam = lambda_const(n, v);
      if (lam.is_zero()) continue;
      const MultiPoly f = f_of_power(n, v, s);
      out += f.embed_z() * f.embed_w_conj() * lam;
    }
    return out;
  });
}

MultiPoly poisson_p_biorthogonal(const GroupParam& g, int n) {
  if (n < 1) throw std::domain_error("biorthogonal form needs n >= 1");
  const int s = g.s();
  const MultiPoly fn = f_of_power(n, Variant::Full, s);
  const MultiPoly fprev = f_of_power(n - 1, Variant::Full, s);
  // f_n(z^s) wbar^s f_{n-1}(wbar^s), plus its conjugate
  const MultiPoly half = fn.embed_z() * fprev.embed_w_conj().shift({0, 0, 0, s});
  return (half + half.conjugate_swap()) * nu_inv(n);
}

MultiPoly kernel_term(const GroupParam& g, int n, int j) {
  if (j < 0 || 2 * j > n) throw std::domain_error("kernel term index out of range");
  const ParamRat w = ParamRat::inv_rising(g.gamma0(), n - j) * ParamRat(pow2(-n) / factorial(j));
  return poisson_p(g, n - 2 * j).shift({j, j, j, j}) * w;
}

std::vector<MultiPoly> kernel_terms(const GroupParam& g, int n) {
  std::vector<MultiPoly> out;
  for (int j = 0; 2 * j <= n; ++j) out.push_back(kernel_term(g, n, j));
  return out;
}

MultiPoly kernel_k(const GroupParam& g, int n) {
  if (n < 0) throw std::domain_error("negative degree");
  static SyncCache<std::pair<int, int>, MultiPoly> cache;
  return cache.get({g.s(), n}, [&] {
    MultiPoly out(4);
    for (const MultiPoly& t : kernel_terms(g, n)) out += t;
    return out;
  });
}

ParamRat xi_weight(const Affine& gamma0, int n, int j) {
  return ParamRat::rising(gamma0, n) * ParamRat::inv_rising(Affine(2 - n) - gamma0, j) *
         ParamRat(1 / factorial(j));
}

ParamRat eta_weight(const Affine& gamma0, int n, int j) {
  return ParamRat::inv_rising(gamma0, n - j) * ParamRat(1 / factorial(j));
}

MultiPoly p_from_k(const GroupParam& g, int n) {
  MultiPoly out(4);
  for (int j = 0; 2 * j <= n; ++j) {
    out += kernel_k(g, n - 2 * j).shift({j, j, j, j}) * (xi_weight(g.gamma0(), n, j) * ParamRat(pow2(n - 2 * j)));
  }
  return out;
}

MultiPoly v_from_kernel(const GroupParam& g, int n, int m) {
  if (m < 0 || m > n) throw std::domain_error("need 0 <= m <= n");
  const MultiPoly k = kernel_k(g, n);
  const ParamRat w(pow2(n) * factorial(m) * factorial(n - m));
  MultiPoly out(2);
  for (const auto& [e, c] : k.terms()) {
    if (e[2] == m && e[3] == n - m) out.add_term({e[0], e[1], 0, 0}, c * w);
  }
  return out;
}

}  // namespace dunkl
