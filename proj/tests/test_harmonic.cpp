#include "doctest.h"
#include "support.hpp"

#include "dunkl/harmonic.hpp"
#include "dunkl/hypergeom.hpp"

using namespace dunkl;

namespace {

const ExactScalar half(1, 2);
const Variant kVariants[] = {Variant::Full, Variant::Real, Variant::Imag};

}  // namespace

TEST_CASE("variant names") {
  CHECK(parse_variant("f") == Variant::Full);
  CHECK(parse_variant("f0") == Variant::Real);
  CHECK(parse_variant("f1") == Variant::Imag);
  CHECK_THROWS(parse_variant("g"));
  CHECK(variant_name(Variant::Imag) == "f1");
}

TEST_CASE("degree zero conventions") {
  CHECK(f_coeff_form(0, Variant::Full) == MultiPoly::constant(ParamRat(1)));
  CHECK(f_coeff_form(0, Variant::Real) == MultiPoly::constant(ParamRat(1)));
  CHECK(f_coeff_form(0, Variant::Imag).is_zero());
  CHECK(lambda_const(0, Variant::Real) == ParamRat(1));
  CHECK(lambda_const(0, Variant::Imag).is_zero());
  CHECK_THROWS(norm_sq(0, Variant::Imag));
}

TEST_CASE("coefficient form equals the Jacobi definition") {
  for (int n = 0; n <= 8; ++n) {
    for (Variant v : kVariants) {
      CAPTURE(n);
      REQUIRE(f_coeff_form(n, v) == f_definitional(n, v));
    }
    CHECK(f_coeff_form(n, Variant::Full) == f_coeff_form(n, Variant::Real) + f_coeff_form(n, Variant::Imag));
    CHECK(f_definitional(n, Variant::Imag).conjugate_swap() == -f_definitional(n, Variant::Imag));
    CHECK(f_coeff_form(n, Variant::Real).homogeneous_degree().value_or(n) == n);
  }
}

TEST_CASE("odd degree one from the Jacobi definition") {
  // f_1^0 = (k0 + 1/2) (z + zbar)/2 since P_0 = 1
  const MultiPoly expect = (MultiPoly::monomial(1, 0) + MultiPoly::monomial(0, 1)) * ParamRat(Affine(1, 0, half)) *
                           ParamRat(half);
  CHECK(f_definitional(1, Variant::Real) == expect);
}

TEST_CASE("coefficients of the symmetric even part") {
  for (int n = 1; n <= 5; ++n) {
    for (int j = 0; j <= n; ++j) {
      const ParamRat e = e_fn(n - j, EParams{Affine::k0(), Affine::k1(), Affine(ExactScalar(2 * j + 1, 2)),
                                             Affine(ExactScalar(2 * j + 1, 2))});
      const ParamRat expect = ParamRat::rising(Affine(1, 1, n), j) * e * ParamRat(pow2(-2 * j) / factorial(j));
      CHECK(harmonic_coeff(2 * n, Variant::Real, n + j, n - j) == expect);
    }
  }
  CHECK(harmonic_coeff(4, Variant::Full, -1, 5).is_zero());
  CHECK(harmonic_coeff(4, Variant::Full, 3, 2).is_zero());
}

TEST_CASE("Chebyshev degeneration at zero parameters") {
  for (int n = 1; n <= 6; ++n) {
    const ScalarPoly f = specialize(f_coeff_form(2 * n, Variant::Real), 0, 0);
    const ExactScalar w = ExactScalar(factorial(2 * n - 1) / factorial(n - 1)) / (factorial(n) * pow2(2 * n));
    ScalarPoly expect(2);
    expect.add_term({2 * n, 0, 0, 0}, w);
    expect.add_term({0, 2 * n, 0, 0}, w);
    CHECK(f == expect);
  }
}

TEST_CASE("structural constant examples") {
  CHECK(lambda_const(2, Variant::Full) == ParamRat::factored(1, {Affine(1, 1, 1)}, {Affine(1, 0, half), Affine(0, 1, half)}));
  CHECK(nu_const(1) == ParamRat::factored(2, {Affine(1, 0, half), Affine(0, 1, half)}, {Affine(1, 1, 1)}));
  CHECK(lambda_const(1, Variant::Full) == ParamRat::factored(1, {}, {Affine(1, 0, half), Affine(0, 1, half)}));
  for (int n = 1; n <= 6; ++n) {
    CHECK(norm_sq(n, Variant::Full) == norm_sq(n, Variant::Real) + norm_sq(n, Variant::Imag));
    CHECK(norm_sq(n, Variant::Full) * lambda_const(n, Variant::Full) == ParamRat(1));
    CHECK(nu_const(n) * nu_inv(n) == ParamRat(1));
  }
}

TEST_CASE("harmonic bases") {
  for (int s = 1; s <= 3; ++s) {
    const GroupParam g(s);
    for (int N = 1; N <= 8; ++N) {
      const auto [h1, h2] = basis_H(g, N);
      CAPTURE(s);
      CAPTURE(N);
      REQUIRE(is_harmonic(h1, g));
      REQUIRE(is_harmonic(h2, g));
      CHECK(h1.homogeneous_degree() == N);
      CHECK(h2.homogeneous_degree() == N);
    }
  }
  const auto [a, b] = basis_H(GroupParam(2), 1);
  CHECK(a == MultiPoly::monomial(1, 0));
  CHECK(b == MultiPoly::monomial(0, 1));
  const auto [c, d] = basis_H(GroupParam(3), 3);
  CHECK(c == f_of_power(1, Variant::Real, 3));
  CHECK(d == f_of_power(1, Variant::Imag, 3));
}

TEST_CASE("circle moments") {
  const GroupParam g(2);
  CHECK(circle_moment(g, 3, 1).is_zero());
  CHECK(circle_moment(g, 3, 3) == ParamRat(1));
  CHECK(jacobi_power_moment(0) == ParamRat(1));
  CHECK(jacobi_power_moment(1) == ParamRat::factored(1, {Affine(-1, 1, 0)}, {Affine(1, 1, 1)}));
  // T_1(t) = t
  CHECK(circle_moment(g, 4, 0) == jacobi_power_moment(1));
  CHECK(circle_moment(GroupParam(1), 0, 2) == jacobi_power_moment(1));
  // T_2(t) = 2t^2 - 1
  CHECK(circle_moment(g, 8, 0) == jacobi_power_moment(2) * ParamRat(2) - ParamRat(1));
  CHECK(inner_product(MultiPoly::constant(ParamRat(1)), MultiPoly::constant(ParamRat(1)), g) == ParamRat(1));
}

TEST_CASE("norms and pairings through the inner product") {
  for (int s = 1; s <= 2; ++s) {
    const GroupParam g(s);
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(s);
      CAPTURE(n);
      for (Variant v : kVariants) {
        const MultiPoly f = f_of_power(n, v, s);
        REQUIRE(inner_product(f, f, g) == norm_sq(n, v));
      }
      const MultiPoly fn = f_of_power(n, Variant::Full, s);
      const MultiPoly prev = f_of_power(n - 1, Variant::Full, s).shift({s, 0, 0, 0});
      REQUIRE(inner_product(fn, prev, g) == nu_const(n));
      CHECK(inner_product(fn, prev.conjugate_swap(), g).is_zero());
      CHECK(inner_product(f_of_power(n, Variant::Real, s), f_of_power(n, Variant::Imag, s), g).is_zero());
      CHECK(inner_product(fn, f_of_power(n - 1, Variant::Full, s), g).is_zero());
    }
  }
  CHECK(inner_product(MultiPoly::constant(ParamRat(1)), MultiPoly::constant(ParamRat(1)), GroupParam(3)) ==
        lambda_const(0, Variant::Full));
}
