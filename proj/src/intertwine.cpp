#include "dunkl/intertwine.hpp"

#include "dunkl/cache.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/harmonic.hpp"
#include "dunkl/hypergeom.hpp"

#include <stdexcept>
#include <tuple>

namespace dunkl {

namespace {

Affine kappa(const ExactScalar& c) { return {1, 1, c}; }

// E_n(k0, k1; c, c) with c = twice_c / 2
ParamRat e_diag(int n, int twice_c) {
  static SyncCache<std::pair<int, int>, ParamRat> cache;
  return cache.get({n, twice_c}, [&] {
    const Affine c(ExactScalar(ExactScalar(twice_c) / 2));
    return e_fn(n, EParams{Affine::k0(), Affine::k1(), c, c});
  });
}

ParamRat scaled(const ExactScalar& x) { return ParamRat(x); }

// a! b! / (j! (gamma0)_m)
ParamRat prefactor(const GroupParam& g, int a, int b, int j, int m) {
  return ParamRat::inv_rising(g.gamma0(), m) * scaled(factorial(a) * factorial(b) / factorial(j));
}

MultiPoly radial(const MultiPoly& f, int j) { return f.shift({j, j, 0, 0}); }

std::vector<VTerm> parity_terms(const GroupParam& g, const MonomialCase& mc, Variant v) {
  std::vector<VTerm> out;
  const int s = g.s();
  for (int k = 0; k <= mc.v; ++k) {
    const int n = mc.u + mc.v - 2 * k;
    const int j = k * s + mc.r;
    const ParamRat lam = lambda_const(n, v);
    if (lam.is_zero()) continue;
    const ParamRat w = prefactor(g, mc.a, mc.b, j, mc.b + (mc.u - k) * s) * lam *
                       harmonic_coeff(n, v, mc.u - k, mc.v - k);
    if (w.is_zero()) continue;
    out.push_back({1, k, radial(f_of_power(n, v, s), j) * w});
  }
  return out;
}

}  // namespace

MonomialCase decompose(const GroupParam& g, int a, int b) {
  if (b < 0 || a < b) throw std::domain_error("decompose needs a >= b >= 0");
  const int s = g.s();
  MonomialCase mc;
  mc.a = a;
  mc.b = b;
  mc.s = s;
  mc.v = b / s;
  mc.r = b % s;
  mc.t = (a - b) % s;
  mc.shifted = mc.t != 0;
  mc.u = (a - mc.r - mc.t) / s;
  return mc;
}

ParamRat first_sum_coeff(int u, int v, int k) {
  if (u - k < 0 || v - k < 0 || u < v) return ParamRat{};
  const int d = u - v;
  if (d % 2 == 0) {
    const int h = d / 2;
    return ParamRat::rising(kappa((u + v) / 2 - k + 1), h) * e_diag(v - k, d + 1) *
           scaled(pow2(-d) / factorial(h));
  }
  const int h = (d + 1) / 2;
  return ParamRat::rising(kappa((u + v + 1) / 2 - k), h) * e_diag(v - k, d + 2) *
         scaled(ExactScalar(u - k + 1) * pow2(-d - 1) / factorial(h));
}

ParamRat second_sum_coeff(int u, int v, int k) {
  if (v - k < 0 || u - k + 1 < 0 || u < v) return ParamRat{};
  const int d = u - v;
  if (d % 2 == 0) {
    const int h = d / 2;
    return ParamRat::rising(kappa((u + v) / 2 - k + 1), h) * e_diag(v - k + 1, d + 1) *
           scaled(ExactScalar(v - k + 1) * pow2(-d) / factorial(h));
  }
  const int h = (d + 1) / 2;
  return ParamRat(kappa(v - k)) * ParamRat::rising(kappa((u + v + 3) / 2 - k), h - 1) * e_diag(v - k, d + 2) *
         scaled(pow2(-d - 1) / factorial(h));
}

std::vector<VTerm> intertwine_terms(const GroupParam& g, int a, int b) {
  const MonomialCase mc = decompose(g, a, b);
  const int s = g.s();
  std::vector<VTerm> out;
  if (mc.shifted) {
    for (int k = 0; k <= mc.v; ++k) {
      const int n = mc.u + mc.v - 2 * k;
      const int j = k * s + mc.r;
      const ParamRat w = prefactor(g, a, b, j, a + (mc.v - k) * s) * lambda_const(n, Variant::Full) *
                         first_sum_coeff(mc.u, mc.v, k);
      if (w.is_zero()) continue;
      out.push_back({1, k, f_of_power(n, Variant::Full, s).shift({j + mc.t, j, 0, 0}) * w});
    }
    for (int k = 1 - (mc.r + mc.t) / s; k <= mc.v; ++k) {
      const int n = mc.u + mc.v + 1 - 2 * k;
      const int j = (k - 1) * s + mc.r + mc.t;
      const ParamRat w = prefactor(g, a, b, j, b + (mc.u - k + 1) * s) * lambda_const(n, Variant::Full) *
                         second_sum_coeff(mc.u, mc.v, k);
      if (w.is_zero()) continue;
      out.push_back({2, k, f_of_power(n, Variant::Full, s).conjugate_swap().shift({j, j + s - mc.t, 0, 0}) * w});
    }
    return out;
  }
  if (a == b) return parity_terms(g, mc, Variant::Real);
  for (int k = 0; k <= mc.v; ++k) {
    const int n = mc.u + mc.v - 2 * k;
    const int j = k * s + mc.r;
    const MultiPoly f = f_of_power(n, Variant::Full, s);
    const MultiPoly inner =
        f * first_sum_coeff(mc.u - 1, mc.v, k) + f.conjugate_swap() * second_sum_coeff(mc.u - 1, mc.v - 1, k);
    if (inner.is_zero()) continue;
    const ParamRat w = prefactor(g, a, b, j, b + (mc.u - k) * s) * nu_inv(n);
    out.push_back({1, k, radial(inner, j) * w});
  }
  return out;
}

MultiPoly intertwine_mono(const GroupParam& g, int a, int b) {
  if (a < 0 || b < 0) throw std::domain_error("negative exponent");
  if (a < b) return intertwine_mono(g, b, a).conjugate_swap();
  static SyncCache<std::tuple<int, int, int>, MultiPoly> cache;
  return cache.get({g.s(), a, b}, [&] {
    MultiPoly out(2);
    for (const VTerm& term : intertwine_terms(g, a, b)) out += term.poly;
    return out;
  });
}

MultiPoly intertwine_sym(const GroupParam& g, int a, int b) {
  const MonomialCase mc = decompose(g, a, b);
  if (mc.shifted) throw std::domain_error("symmetric expansion needs a = b mod s");
  MultiPoly out(2);
  for (const VTerm& term : parity_terms(g, mc, Variant::Real)) out += term.poly;
  return out;
}

MultiPoly intertwine_antisym(const GroupParam& g, int a, int b) {
  const MonomialCase mc = decompose(g, a, b);
  if (mc.shifted) throw std::domain_error("antisymmetric expansion needs a = b mod s");
  MultiPoly out(2);
  for (const VTerm& term : parity_terms(g, mc, Variant::Imag)) out += term.poly;
  return out;
}

MultiPoly intertwine_poly(const GroupParam& g, const MultiPoly& f) {
  if (f.arity() != 2) throw std::invalid_argument("intertwine_poly needs arity 2");
  MultiPoly out(2);
  for (const auto& [e, c] : f.terms()) out += intertwine_mono(g, e[0], e[1]) * c;
  return out;
}

namespace {

bool is_nonpositive_integer(const ExactScalar& x) { return is_integer(x) && x <= 0; }

void check_nonsingular(const GroupParam& g, const ExactScalar& k0, const ExactScalar& k1) {
  const ExactScalar half(1, 2);
  if (is_nonpositive_integer(k0 + half) || is_nonpositive_integer(k1 + half)) {
    throw SingularParameterError("k0 or k1 lies in -1/2 - N0");
  }
  const ExactScalar sum = ExactScalar(g.s()) * (k0 + k1);
  if (is_integer(sum) && sum < 0) throw SingularParameterError("s(k0 + k1) is a negative integer");
}

using Matrix = std::vector<std::vector<ExactScalar>>;

// Reduces [m | rhs] in place to row echelon form; returns the pivot columns.
std::vector<int> eliminate(Matrix& m, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(m.size());
  for (int col = 0; col < cols && row < rows; ++col) {
    int pick = -1;
    for (int i = row; i < rows; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) continue;
    std::swap(m[static_cast<std::size_t>(row)], m[static_cast<std::size_t>(pick)]);
    auto& prow = m[static_cast<std::size_t>(row)];
    const ExactScalar inv = 1 / prow[static_cast<std::size_t>(col)];
    for (auto& x : prow) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row) continue;
      auto& other = m[static_cast<std::size_t>(i)];
      const ExactScalar f = other[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (std::size_t c = 0; c < other.size(); ++c) other[c] -= f * prow[c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::map<std::pair<int, int>, ScalarPoly> oracle_table(const GroupParam& g, int max_degree, const ExactScalar& k0,
                                                       const ExactScalar& k1) {
  check_nonsingular(g, k0, k1);
  std::map<std::pair<int, int>, ScalarPoly> table;
  table.emplace(std::pair{0, 0}, ScalarPoly::constant(1));
  for (int n = 1; n <= max_degree; ++n) {
    // columns: unknown coefficient of z^{n-j} zbar^j; rows: coefficient of
    // z^{n-1-i} zbar^i in T (first n rows) and Tbar (last n rows)
    std::vector<ScalarPoly> t_img;
    std::vector<ScalarPoly> tb_img;
    for (int j = 0; j <= n; ++j) {
      const MultiPoly mono = MultiPoly::monomial(n - j, j);
      t_img.push_back(specialize(apply_T(mono, g), k0, k1));
      tb_img.push_back(specialize(apply_Tbar(mono, g), k0, k1));
    }
    const int cols = n + 1;
    Matrix m(static_cast<std::size_t>(2 * n), std::vector<ExactScalar>(static_cast<std::size_t>(cols + n + 1)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= n; ++j) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t_img[static_cast<std::size_t>(j)].coeff(n - 1 - i, i);
        m[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(j)] =
            tb_img[static_cast<std::size_t>(j)].coeff(n - 1 - i, i);
      }
    }
    // right-hand sides: one column per monomial z^{n-q} zbar^q
    for (int q = 0; q <= n; ++q) {
      const int a = n - q;
      const int b = q;
      const std::size_t col = static_cast<std::size_t>(cols + q);
      if (a > 0) {
        const ScalarPoly& prev = table.at({a - 1, b});
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][col] = ExactScalar(a) * prev.coeff(n - 1 - i, i);
      }
      if (b > 0) {
        const ScalarPoly& prev = table.at({a, b - 1});
        for (int i = 0; i < n; ++i) {
          m[static_cast<std::size_t>(n + i)][col] = ExactScalar(b) * prev.coeff(n - 1 - i, i);
        }
      }
    }
    const std::vector<int> pivots = eliminate(m, cols);
    if (static_cast<int>(pivots.size()) < cols) {
      throw SingularParameterError("defining relations do not determine V in degree " + std::to_string(n));
    }
    for (std::size_t i = static_cast<std::size_t>(cols); i < m.size(); ++i) {
      for (int q = 0; q <= n; ++q) {
        if (m[i][static_cast<std::size_t>(cols + q)] != 0) {
          throw InconsistentSystemError("defining relations inconsistent for z^" + std::to_string(n - q) + " zbar^" +
                                        std::to_string(q));
        }
      }
    }
    for (int q = 0; q <= n; ++q) {
      ScalarPoly vq(2);
      for (int j = 0; j <= n; ++j) {
        vq.add_term({n - j, j, 0, 0}, m[static_cast<std::size_t>(j)][static_cast<std::size_t>(cols + q)]);
      }
      table.emplace(std::pair{n - q, q}, std::move(vq));
    }
  }
  return table;
}

ScalarPoly oracle_v(const GroupParam& g, const MultiPoly& f, const ExactScalar& k0, const ExactScalar& k1) {
  if (f.arity() != 2) throw std::invalid_argument("oracle_v needs arity 2");
  int deg = 0;
  for (const auto& [e, c] : f.terms()) deg = std::max(deg, e[0] + e[1]);
  const auto table = oracle_table(g, deg, k0, k1);
  ScalarPoly out(2);
  for (const auto& [e, c] : f.terms()) out += table.at({e[0], e[1]}) * c.specialize(k0, k1);
  return out;
}

}  // namespace dunkl
