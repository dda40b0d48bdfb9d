#include "dunkl/harmonic.hpp"

#include "dunkl/cache.hpp"
#include "dunkl/hypergeom.hpp"

#include <cstdlib>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace dunkl {

namespace {

const ExactScalar kHalf(1, 2);

// k0 + k1 + c
Affine kappa(const ExactScalar& c) { return {1, 1, c}; }
Affine k0_plus(const ExactScalar& c) { return {1, 0, c}; }
Affine k1_plus(const ExactScalar& c) { return {0, 1, c}; }

// E_n(k0, k1; c1, c2) with half-integer c1, c2 given as twice their value.
ParamRat e_kappa(int n, int twice_c1, int twice_c2) {
  static SyncCache<std::tuple<int, int, int>, ParamRat> cache;
  return cache.get({n, twice_c1, twice_c2}, [&] {
    return e_fn(n, {Affine::k0(), Affine::k1(), Affine(ExactScalar(ExactScalar(twice_c1) / 2)), Affine(ExactScalar(ExactScalar(twice_c2) / 2))});
  });
}

ParamRat scalar(const ExactScalar& x) { return ParamRat(x); }

void push_rising(std::vector<Affine>& out, const Affine& base, int n) {
  for (int i = 0; i < n; ++i) out.push_back(base + Affine(i));
}

struct Factored {
  ExactScalar c = 1;
  std::vector<Affine> num;
  std::vector<Affine> den;
};

Factored lambda_factors(int n, Variant v) {
  Factored f;
  if (n < 0) throw std::domain_error("negative degree");
  if (n == 0) {
    f.c = v == Variant::Imag ? 0 : 1;
    return f;
  }
  const int p = n / 2;
  if (n % 2 == 0) {
    switch (v) {
      case Variant::Real:
        f.c = factorial(p);
        push_rising(f.num, kappa(1), p);
        f.num.push_back(kappa(2 * p));
        f.den.push_back(kappa(p));
        break;
      case Variant::Imag:
        f.c = factorial(p - 1);
        push_rising(f.num, kappa(1), p);
        f.num.push_back(kappa(2 * p));
        break;
      case Variant::Full:
        f.c = factorial(p);
        push_rising(f.num, kappa(1), p);
        break;
    }
    push_rising(f.den, k0_plus(kHalf), p);
    push_rising(f.den, k1_plus(kHalf), p);
  } else {
    f.c = factorial(p);
    push_rising(f.num, kappa(1), p);
    if (v == Variant::Real) f.den.push_back(k0_plus(p + kHalf));
    if (v == Variant::Imag) f.den.push_back(k1_plus(p + kHalf));
    if (v != Variant::Full) f.num.push_back(kappa(2 * p + 1));
    push_rising(f.den, k0_plus(kHalf), p + 1);
    push_rising(f.den, k1_plus(kHalf), p + 1);
  }
  return f;
}

Factored nu_factors(int n) {
  if (n < 1) throw std::domain_error("nu is defined for degree >= 1");
  Factored f;
  const int p = n / 2;
  f.c = 2;
  if (n % 2 == 0) {
    f.c /= factorial(p - 1);
    push_rising(f.num, k0_plus(kHalf), p);
    push_rising(f.num, k1_plus(kHalf), p);
    push_rising(f.den, kappa(1), p - 1);
    f.den.push_back(kappa(2 * p));
  } else {
    f.c /= factorial(p);
    push_rising(f.num, k0_plus(kHalf), p + 1);
    push_rising(f.num, k1_plus(kHalf), p + 1);
    push_rising(f.den, kappa(1), p);
    f.den.push_back(kappa(2 * p + 1));
  }
  return f;
}

// r^{2p} P_p^{(alpha,beta)}(cos 2theta) as a polynomial in z, zbar, using
// (1 - cos 2theta)/2 = -(z - zbar)^2 / (4 z zbar).
MultiPoly jacobi_radial(int p, const Affine& alpha, const Affine& beta) {
  const auto coeffs = jacobi_coeffs(p, alpha, beta);
  const MultiPoly diff_sq = (z_poly() - zbar_poly()) * (z_poly() - zbar_poly());
  MultiPoly power = MultiPoly::constant(ParamRat(1));
  MultiPoly out(2);
  for (int k = 0; k <= p; ++k) {
    ExactScalar w = pow2(-2 * k);
    if (k % 2 == 1) w = -w;
    out += power.shift({p - k, p - k, 0, 0}) * (coeffs[static_cast<std::size_t>(k)] * ParamRat(w));
    power = power * diff_sq;
  }
  return out;
}

std::vector<ExactScalar> chebyshev_coeffs(int l) {
  std::vector<ExactScalar> prev{1};
  if (l == 0) return prev;
  std::vector<ExactScalar> cur{0, 1};
  for (int k = 1; k < l; ++k) {
    std::vector<ExactScalar> next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Integral of T_l(cos 2s theta), independent of s.
ParamRat chebyshev_moment(int l) {
  static SyncCache<int, ParamRat> cache;
  return cache.get(l, [&] {
    const auto t = chebyshev_coeffs(l);
    ParamRat sum;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] != 0) sum += jacobi_power_moment(static_cast<int>(i)) * ParamRat(t[i]);
    }
    return sum;
  });
}

}  // namespace

Variant parse_variant(std::string_view name) {
  if (name == "f") return Variant::Full;
  if (name == "f0") return Variant::Real;
  if (name == "f1") return Variant::Imag;
  throw std::invalid_argument("unknown variant: " + std::string(name));
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Full:
      return "f";
    case Variant::Real:
      return "f0";
    case Variant::Imag:
      return "f1";
  }
  return "?";
}

ParamRat harmonic_coeff(int n, Variant v, int a, int b) {
  if (n < 0 || a < 0 || b < 0 || a + b != n) return ParamRat{};
  if (n == 0) return v == Variant::Imag ? ParamRat{} : ParamRat(1);
  const int p = n / 2;
  if (n % 2 == 0) {
    const int j = a - p;
    const int jj = std::abs(j);
    const ParamRat e = e_kappa(p - jj, 2 * jj + 1, 2 * jj + 1);
    const ExactScalar inv4 = pow2(-2 * jj);
    switch (v) {
      case Variant::Real:
        if (jj == 0) return e;
        return ParamRat::rising(kappa(p), jj) * e * scalar(inv4 / factorial(jj));
      case Variant::Imag: {
        if (jj == 0) return ParamRat{};
        ParamRat out = ParamRat::rising(kappa(p + 1), jj - 1) * e * scalar(inv4 / factorial(jj - 1));
        return j > 0 ? out : -out;
      }
      case Variant::Full:
        if (jj == 0) return e;
        return ParamRat(kappa(p + j)) * ParamRat::rising(kappa(p + 1), jj - 1) * e *
               scalar(inv4 / factorial(jj));
    }
  }
  // n = 2p + 1
  if (v == Variant::Full) {
    if (a >= p + 1) {
      const int j = a - p;
      return ParamRat::rising(kappa(p + 1), j) * e_kappa(p + 1 - j, 2 * j + 1, 2 * j + 1) *
             scalar(ExactScalar(p + 1 + j) * pow2(-2 * j) / factorial(j));
    }
    const int j = p - a;
    return ParamRat::rising(kappa(p + 1), j) * e_kappa(p + 1 - j, 2 * j + 1, 2 * j + 1) *
           scalar(ExactScalar(p + 1 - j) * pow2(-2 * j) / factorial(j));
  }
  const bool upper = a >= p + 1;
  const int j = upper ? a - p - 1 : p - a;
  const ExactScalar w = pow2(-2 * j - 1) / factorial(j);
  if (v == Variant::Real) {
    return ParamRat(k0_plus(p + kHalf)) * ParamRat::rising(kappa(p + 1), j) *
           e_kappa(p - j, 2 * j + 1, 2 * j + 3) * scalar(w);
  }
  ParamRat out = ParamRat(k1_plus(p + kHalf)) * ParamRat::rising(kappa(p + 1), j) *
                 e_kappa(p - j, 2 * j + 3, 2 * j + 1) * scalar(w);
  return upper ? out : -out;
}

MultiPoly f_coeff_form(int n, Variant v) {
  if (n < 0) throw std::domain_error("negative degree");
  static SyncCache<std::pair<int, int>, MultiPoly> cache;
  return cache.get({n, static_cast<int>(v)}, [&] {
    MultiPoly out(2);
    for (int a = 0; a <= n; ++a) out.add_term({a, n - a, 0, 0}, harmonic_coeff(n, v, a, n - a));
    return out;
  });
}

MultiPoly f_definitional(int n, Variant v) {
  if (n < 0) throw std::domain_error("negative degree");
  const int p = n / 2;
  MultiPoly full(2);
  if (n % 2 == 0) {
    full = jacobi_radial(p, k0_plus(-kHalf), k1_plus(-kHalf));
    if (p >= 1) {
      // (i/2) r^2 sin 2theta = (z^2 - zbar^2) / 4
      const MultiPoly sine = (MultiPoly::monomial(2, 0) - MultiPoly::monomial(0, 2)) * ParamRat(ExactScalar(1, 4));
      full += sine * jacobi_radial(p - 1, k0_plus(kHalf), k1_plus(kHalf));
    }
  } else {
    // r cos theta = (z + zbar)/2 and i r sin theta = (z - zbar)/2
    const MultiPoly cosine = (z_poly() + zbar_poly()) * ParamRat(kHalf);
    const MultiPoly sine = (z_poly() - zbar_poly()) * ParamRat(kHalf);
    full = cosine * jacobi_radial(p, k0_plus(-kHalf), k1_plus(kHalf)) * ParamRat(k0_plus(p + kHalf)) +
           sine * jacobi_radial(p, k0_plus(kHalf), k1_plus(-kHalf)) * ParamRat(k1_plus(p + kHalf));
  }
  switch (v) {
    case Variant::Full:
      return full;
    case Variant::Real:
      return (full + full.conjugate_swap()) * ParamRat(kHalf);
    case Variant::Imag:
      return (full - full.conjugate_swap()) * ParamRat(kHalf);
  }
  return full;
}

MultiPoly f_of_power(int n, Variant v, int s) { return f_coeff_form(n, v).substitute_power(s); }

ParamRat lambda_const(int n, Variant v) {
  const Factored f = lambda_factors(n, v);
  return ParamRat::factored(f.c, f.num, f.den);
}

ParamRat norm_sq(int n, Variant v) {
  const Factored f = lambda_factors(n, v);
  if (f.c == 0) throw std::domain_error("squared norm of the zero polynomial");
  return ParamRat::factored(1 / f.c, f.den, f.num);
}

ParamRat nu_const(int n) {
  const Factored f = nu_factors(n);
  return ParamRat::factored(f.c, f.num, f.den);
}

ParamRat nu_inv(int n) {
  const Factored f = nu_factors(n);
  return ParamRat::factored(1 / f.c, f.den, f.num);
}

std::pair<MultiPoly, MultiPoly> basis_H(const GroupParam& g, int N) {
  if (N < 1) throw std::domain_error("basis_H needs N >= 1");
  const int s = g.s();
  const int n = N / s;
  const int t = N % s;
  if (t == 0) return {f_of_power(n, Variant::Real, s), f_of_power(n, Variant::Imag, s)};
  const MultiPoly first = f_of_power(n, Variant::Full, s).shift({t, 0, 0, 0});
  return {first, first.conjugate_swap()};
}

ParamRat jacobi_power_moment(int j) {
  if (j < 0) throw std::domain_error("negative moment order");
  static SyncCache<int, ParamRat> cache;
  return cache.get(j, [&] {
    // t = 1 - 2X with X Beta(k0 + 1/2, k1 + 1/2) distributed, and
    // E[X^i] = (k0 + 1/2)_i / (k0 + k1 + 1)_i.
    ParamRat sum;
    for (int i = 0; i <= j; ++i) {
      ExactScalar w = binomial(j, i) * pow2(i);
      if (i % 2 == 1) w = -w;
      sum += ParamRat::rising(k0_plus(kHalf), i) * ParamRat::inv_rising(kappa(1), i) * ParamRat(w);
    }
    return sum;
  });
}

ParamRat circle_moment(const GroupParam& g, int a, int b) {
  if (a < 0 || b < 0) throw std::domain_error("negative exponent");
  const int d = std::abs(a - b);
  if (d % (2 * g.s()) != 0) return ParamRat{};
  return chebyshev_moment(d / (2 * g.s()));
}

ParamRat inner_product(const MultiPoly& f, const MultiPoly& h, const GroupParam& g) {
  if (f.arity() != 2 || h.arity() != 2) throw std::invalid_argument("inner product needs arity 2");
  // Collect the coefficient of each difference a - b first, then integrate.
  std::map<int, ParamRat> by_diff;
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eh, ch] : h.terms()) {
      const int d = (ef[0] + eh[1]) - (ef[1] + eh[0]);
      if (d % (2 * g.s()) != 0) continue;
      by_diff[std::abs(d)] += cf * ch;
    }
  }
  ParamRat sum;
  for (const auto& [d, c] : by_diff) {
    if (!c.is_zero()) sum += c * chebyshev_moment(d / (2 * g.s()));
  }
  return sum;
}

}  // namespace dunkl
