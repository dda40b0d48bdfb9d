#include "dunkl/hypergeom.hpp"

#include "dunkl/errors.hpp"

#include <stdexcept>

namespace dunkl {

namespace {

void require_degree(int n) {
  if (n < 0) throw std::domain_error("negative degree");
}

ParamRat inv_rising_checked(const Affine& base, int n) {
  for (int i = 0; i < n; ++i) {
    if ((base + Affine(i)).is_zero()) throw DegenerateDenominator("rising factorial in denominator vanishes");
  }
  return ParamRat::inv_rising(base, n);
}

}  // namespace

ParamRat e_fn(int n, const EParams& p) {
  require_degree(n);
  const ParamRat front = inv_rising_checked(p.c1 + p.c2, n) * ParamRat(1 / factorial(n));
  ParamPoly sum;
  for (int j = 0; j <= n; ++j) {
    ParamPoly term = pochhammer(p.a, n - j) * pochhammer(p.b, j);
    if (term.is_zero()) continue;
    term = term * pochhammer(p.c1, j) * pochhammer(p.c2, n - j);
    // (-n)_j / j! = (-1)^j C(n, j)
    ExactScalar w = binomial(n, j);
    if (j % 2 == 1) w = -w;
    sum += term * w;
  }
  return ParamRat(sum) * front;
}

ParamRat e_fn_alt(int n, const EParams& p) {
  require_degree(n);
  const Affine top = Affine(n - 1) + p.a + p.b + p.c1 + p.c2;
  ParamRat sum;
  for (int j = 0; j <= n; ++j) {
    ParamPoly num = pochhammer(top, j) * pochhammer(p.c1, j);
    if (num.is_zero()) continue;
    num = num * pochhammer(p.a + p.c1 + Affine(j), n - j);
    ExactScalar w = binomial(n, j) / factorial(n);
    if (j % 2 == 1) w = -w;
    sum += ParamRat(num * w) * inv_rising_checked(p.c1 + p.c2, j);
  }
  return sum;
}

std::pair<bool, bool> contiguity_check(int m, const Affine& a, const Affine& b, const Affine& c) {
  require_degree(m);
  const Affine c_up = c + Affine(1);
  const ParamRat left_first = ParamRat(Affine(m) + a + c) * e_fn(m, {a, b, c, c_up});
  const ParamRat left_second = ParamRat(Affine(m) + b + c) * e_fn(m, {a, b, c_up, c});
  const ParamRat minus_rhs = ParamRat(2 * (m + 1)) * e_fn(m + 1, {a, b, c, c});
  const ParamRat plus_rhs = ParamRat::factored(1, {Affine(m + 1) + 2 * c, Affine(m) + a + b + 2 * c},
                                               {Affine(1) + 2 * c}) *
                            e_fn(m, {a, b, c_up, c_up});
  return {left_first - left_second == minus_rhs, left_first + left_second == plus_rhs};
}

std::vector<ParamRat> jacobi_coeffs(int n, const Affine& alpha, const Affine& beta) {
  require_degree(n);
  std::vector<ParamRat> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  const Affine top = Affine(n + 1) + alpha + beta;
  for (int k = 0; k <= n; ++k) {
    ParamPoly num = pochhammer(top, k) * pochhammer(alpha + Affine(1 + k), n - k);
    ExactScalar w = binomial(n, k) / factorial(n);
    if (k % 2 == 1) w = -w;
    out.emplace_back(num * w);
  }
  return out;
}

}  // namespace dunkl
