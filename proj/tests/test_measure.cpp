#include "doctest.h"

#include "dunkl/harmonic.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

using namespace dunkl;

namespace {

const std::pair<double, double> kPoints[] = {{0.3, 0.7}, {1.25, 0.5}, {2.0, 3.0}};

double weighted_integral(double k0, double k1, int j) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [&](double t) { return std::pow(t, j) * std::pow(1 - t, k0 - 0.5) * std::pow(1 + t, k1 - 0.5); };
  return integrator.integrate(f, -1.0, 1.0);
}

// integral over the circle of cos(d theta) against |sin s theta|^{2k0} |cos s theta|^{2k1}
double circle_integral(int s, double k0, double k1, int d) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [&](double th) {
    return std::cos(d * th) * std::pow(std::abs(std::sin(s * th)), 2 * k0) * std::pow(std::abs(std::cos(s * th)), 2 * k1);
  };
  const double step = M_PI / (2 * s);
  double sum = 0;
  for (int i = 0; i < 4 * s; ++i) sum += integrator.integrate(f, i * step, (i + 1) * step);
  return sum;
}

}  // namespace

TEST_CASE("power moments match numeric quadrature") {
  for (const auto& [k0, k1] : kPoints) {
    const double norm = weighted_integral(k0, k1, 0);
    for (int j = 0; j <= 12; ++j) {
      const double numeric = weighted_integral(k0, k1, j) / norm;
      const double exact = jacobi_power_moment(j).eval(k0, k1);
      CAPTURE(j);
      CHECK(std::abs(numeric - exact) < 1e-9);
    }
  }
}

TEST_CASE("circle moments match the angular integral") {
  for (int s = 1; s <= 3; ++s) {
    const GroupParam g(s);
    for (const auto& [k0, k1] : kPoints) {
      const double norm = circle_integral(s, k0, k1, 0);
      for (int a = 0; a <= 12; ++a) {
        for (int b = 0; b <= 12; ++b) {
          const double numeric = circle_integral(s, k0, k1, a - b) / norm;
          CHECK(std::abs(numeric - circle_moment(g, a, b).eval(k0, k1)) < 1e-9);
        }
      }
    }
  }
}
