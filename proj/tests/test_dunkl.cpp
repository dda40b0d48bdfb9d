#include "doctest.h"

#include "dunkl/dunkl.hpp"

#include <cmath>
#include <random>

using namespace dunkl;

namespace {

const ParamRat kGamma2 = ParamRat(Affine(2, 2, 1));

}  // namespace

TEST_CASE("group parameter") {
  CHECK_THROWS(GroupParam(0));
  CHECK(GroupParam(3).gamma0() == Affine(3, 3, 1));
}

TEST_CASE("operators on low-degree monomials") {
  for (int s = 1; s <= 4; ++s) {
    const GroupParam g(s);
    const ParamRat gamma(g.gamma0());
    const MultiPoly one = MultiPoly::constant(ParamRat(1));
    CHECK(apply_T(one, g).is_zero());
    CHECK(apply_Tbar(one, g).is_zero());
    CHECK(apply_T(MultiPoly::monomial(1, 0), g) == MultiPoly::constant(gamma));
    CHECK(apply_Tbar(MultiPoly::monomial(0, 1), g) == MultiPoly::constant(gamma));
    if (s == 1) {
      CHECK(apply_T(MultiPoly::monomial(0, 1), g) == MultiPoly::constant(ParamRat(Affine(-1, 1, 0))));
    } else {
      CHECK(apply_T(MultiPoly::monomial(0, 1), g).is_zero());
      CHECK(apply_Tbar(MultiPoly::monomial(1, 0), g).is_zero());
    }
    CHECK(laplacian(one, g).is_zero());
    CHECK(is_harmonic(one, g));
    CHECK(!is_harmonic(MultiPoly::monomial(1, 1), g));
  }
  const GroupParam g2(2);
  CHECK(laplacian(MultiPoly::monomial(1, 1), g2) ==
        apply_T(apply_Tbar(MultiPoly::monomial(1, 1), g2), g2) * ParamRat(4));
}

TEST_CASE("commutation, degree and conjugation equivariance") {
  for (int s = 1; s <= 3; ++s) {
    const GroupParam g(s);
    for (int a = 0; a <= 8; ++a) {
      for (int b = 0; a + b <= 8; ++b) {
        const MultiPoly f = MultiPoly::monomial(a, b);
        const MultiPoly tf = apply_T(f, g);
        const MultiPoly tbf = apply_Tbar(f, g);
        REQUIRE(apply_T(tbf, g) == apply_Tbar(tf, g));
        REQUIRE(tbf == apply_T(f.conjugate_swap(), g).conjugate_swap());
        if (!tf.is_zero()) REQUIRE(tf.homogeneous_degree() == a + b - 1);
        if (!tbf.is_zero()) REQUIRE(tbf.homogeneous_degree() == a + b - 1);
        REQUIRE(specialize(tf, 0, 0) == specialize(partial_z(f), 0, 0));
        REQUIRE(specialize(tbf, 0, 0) == specialize(partial_zbar(f), 0, 0));
      }
    }
  }
}

TEST_CASE("reflection-sum oracle for z") {
  const GroupParam g(2);
  const auto v = definitional_eval_T(MultiPoly::monomial(1, 0), g, {0.3, 0.4}, 0.25, 0.5);
  CHECK(std::abs(v - std::complex<double>(2.5, 0)) < 1e-9);
  CHECK(std::abs(definitional_eval_T(MultiPoly::constant(ParamRat(1)), g, {0.3, 0.4}, 0.25, 0.5)) < 1e-12);
  CHECK_THROWS_AS(definitional_eval_T(MultiPoly::monomial(1, 0), g, {0.5, 0.0}, 0.25, 0.5), MirrorProximityError);
  CHECK_THROWS_AS(definitional_eval_T(MultiPoly::monomial(1, 0), g, {0.5, 0.5}, 0.25, 0.5), MirrorProximityError);
}

TEST_CASE("closed formulas agree with the reflection-sum oracle") {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  std::uniform_real_distribution<double> radius(0.5, 1.2);
  std::uniform_real_distribution<double> param(-0.4, 2.0);
  std::uniform_int_distribution<int> expo(0, 8);
  int runs = 0;
  double worst = 0;
  for (int s = 1; s <= 3; ++s) {
    const GroupParam g(s);
    while (runs < 50 * s) {
      const int a = expo(rng);
      const int b = expo(rng);
      if (a + b > 8) continue;
      const std::complex<double> z0 = std::polar(radius(rng), angle(rng));
      const double k0 = param(rng);
      const double k1 = param(rng);
      const MultiPoly f = MultiPoly::monomial(a, b);
      try {
        const auto t_ref = definitional_eval_T(f, g, z0, k0, k1);
        const auto tb_ref = definitional_eval_Tbar(f, g, z0, k0, k1);
        worst = std::max(worst, std::abs(t_ref - eval_at(apply_T(f, g), z0, k0, k1)));
        worst = std::max(worst, std::abs(tb_ref - eval_at(apply_Tbar(f, g), z0, k0, k1)));
        ++runs;
      } catch (const MirrorProximityError&) {
      }
    }
  }
  CHECK(worst < 1e-9);
}
