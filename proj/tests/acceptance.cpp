// Acceptance run: one PASS/FAIL line per criterion.
#include "dunkl/harmonic.hpp"
#include "dunkl/hypergeom.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/verify.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace dunkl;

namespace {

const ExactScalar half(1, 2);
const Variant kVariants[] = {Variant::Full, Variant::Real, Variant::Imag};

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

Outcome from_report(const VerificationReport& rep) {
  Outcome out;
  if (const VerificationRecord* bad = rep.first_failure()) {
    out.require(false, bad->identity + " " + bad->params.dump() + ": " + bad->witness);
  } else {
    out.detail = std::to_string(rep.records.size()) + " checks";
  }
  return out;
}

std::string where(std::initializer_list<std::pair<const char*, int>> kv) {
  std::ostringstream os;
  for (const auto& [k, v] : kv) os << k << '=' << v << ' ';
  return os.str();
}

Outcome golden() {
  Outcome out;
  const ParamRat den = ParamRat::factored(1, {}, {Affine(2, 0, 1), Affine(0, 2, 1), Affine(2, 2, 1)});
  const MultiPoly vz2_s2 =
      (MultiPoly::monomial(2, 0, ParamRat(Affine(1, 1, 1))) + MultiPoly::monomial(0, 2, ParamRat(Affine(1, -1, 0)))) *
      den;
  out.require(intertwine_mono(GroupParam(2), 2, 0) == vz2_s2, "V z^2 for s=2");
  out.require(intertwine_mono(GroupParam(3), 2, 0) ==
                  MultiPoly::monomial(2, 0, ParamRat::factored(2, {}, {Affine(3, 3, 1), Affine(3, 3, 2)})),
              "V z^2 for s=3");
  for (int s = 2; s <= 3; ++s) {
    for (int n = 1; n <= 2; ++n) {
      std::vector<Affine> num;
      std::vector<Affine> dens;
      for (int i = 0; i < 2 * n; ++i) num.push_back(Affine(1, 1, 1 + i));
      for (int i = 0; i < n; ++i) {
        num.push_back(Affine(1, 1, n + 1 + i));
        dens.push_back(Affine(1, 0, half + i));
        dens.push_back(Affine(0, 1, half + i));
      }
      for (int i = 0; i < 2 * n * s + 1; ++i) dens.push_back(Affine(s, s, 1 + i));
      const int deg = 2 * n * s + 1;
      const ParamRat lead = ParamRat::factored(factorial(deg) / (pow2(4 * n) * factorial(n)), num, dens);
      out.require(intertwine_mono(GroupParam(s), deg, 0).coeff(deg, 0) == lead,
                  "leading coefficient " + where({{"s", s}, {"n", n}}));
    }
  }
  return out;
}

Outcome triple_agreement() {
  Outcome out;
  int count = 0;
  for (int s = 1; s <= 3; ++s) {
    const GroupParam g(s);
    for (int n = 0; n <= 6; ++n) {
      for (int m = 0; m <= n; ++m, ++count) {
        out.require(v_from_kernel(g, n, m) == intertwine_mono(g, n - m, m),
                    "kernel coefficient " + where({{"s", s}, {"a", n - m}, {"b", m}}));
      }
    }
  }
  if (out.passed) out.detail = std::to_string(count) + " monomials";
  return out;
}

Outcome hypergeometric() {
  Outcome out;
  const Affine k0 = Affine::k0();
  const Affine k1 = Affine::k1();
  for (int n = 0; n <= 10; ++n) {
    const ParamRat sign(n % 2 == 0 ? 1 : -1);
    for (int j = 0; j <= 4; ++j) {
      const Affine lo(ExactScalar(2 * j + 1, 2));
      const Affine hi(ExactScalar(2 * j + 3, 2));
      const std::vector<EParams> shapes = {
          {k0, k1, lo, lo}, {k0, k1, lo, hi}, {k0, k1, hi, lo}, {k0 + Affine(1), k1, lo, lo}, {k0, k1 + Affine(1), hi, hi}};
      for (const EParams& p : shapes) {
        out.require(e_fn(n, p) == e_fn_alt(n, p), "transformed series " + where({{"n", n}, {"j", j}}));
        out.require(e_fn(n, p) == sign * e_fn(n, EParams{p.b, p.a, p.c2, p.c1}), "symmetry " + where({{"n", n}, {"j", j}}));
      }
      const auto [minus, plus] = contiguity_check(n, k0, k1, lo);
      out.require(minus && plus, "contiguity " + where({{"m", n}, {"j", j}}));
    }
  }
  return out;
}

Outcome harmonic_layer() {
  Outcome out;
  for (int n = 0; n <= 8; ++n) {
    for (Variant v : kVariants) {
      out.require(f_coeff_form(n, v) == f_definitional(n, v), "coefficient form " + where({{"n", n}}) + variant_name(v));
    }
  }
  for (int s = 1; s <= 3; ++s) {
    const GroupParam g(s);
    for (int N = 1; N <= 8; ++N) {
      const auto [h1, h2] = basis_H(g, N);
      out.require(is_harmonic(h1, g) && is_harmonic(h2, g), "harmonic basis " + where({{"s", s}, {"N", N}}));
    }
  }
  // at zero parameters the symmetric members are Chebyshev polynomials in cos
  for (int n = 1; n <= 6; ++n) {
    const ScalarPoly f = specialize(f_coeff_form(2 * n, Variant::Real), 0, 0);
    const ExactScalar w = ExactScalar(factorial(2 * n - 1) / factorial(n - 1)) / (factorial(n) * pow2(2 * n));
    ScalarPoly expect(2);
    expect.add_term({2 * n, 0, 0, 0}, w);
    expect.add_term({0, 2 * n, 0, 0}, w);
    out.require(f == expect, "Chebyshev degeneration " + where({{"n", n}}));
  }
  for (int n = 1; n <= 6; ++n) {
    for (Variant v : kVariants) {
      out.require(norm_sq(n, v) * lambda_const(n, v) == ParamRat(1),
                  "reciprocal norm constant " + where({{"n", n}}) + variant_name(v));
    }
    out.require(norm_sq(n, Variant::Full) == norm_sq(n, Variant::Real) + norm_sq(n, Variant::Imag),
                "norm constant splitting " + where({{"n", n}}));
    for (int s = 1; s <= 3; ++s) {
      out.require(poisson_p_biorthogonal(GroupParam(s), n) == poisson_p(GroupParam(s), n * s),
                  "biorthogonal kernel " + where({{"s", s}, {"n", n}}));
    }
  }
  return out;
}

double power_integral(double k0, double k1, int j) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [&](double t) { return std::pow(t, j) * std::pow(1 - t, k0 - 0.5) * std::pow(1 + t, k1 - 0.5); };
  return integrator.integrate(f, -1.0, 1.0);
}

double angular_integral(int s, double k0, double k1, int d) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [&](double th) {
    return std::cos(d * th) * std::pow(std::abs(std::sin(s * th)), 2 * k0) * std::pow(std::abs(std::cos(s * th)), 2 * k1);
  };
  const double step = M_PI / (2 * s);
  double sum = 0;
  for (int i = 0; i < 4 * s; ++i) sum += integrator.integrate(f, i * step, (i + 1) * step);
  return sum;
}

Outcome measure_layer() {
  Outcome out;
  const std::pair<double, double> points[] = {{0.3, 0.7}, {1.25, 0.5}, {2.0, 3.0}};
  double worst = 0;
  for (const auto& [k0, k1] : points) {
    const double norm = power_integral(k0, k1, 0);
    for (int j = 0; j <= 12; ++j) {
      worst = std::max(worst, std::abs(power_integral(k0, k1, j) / norm - jacobi_power_moment(j).eval(k0, k1)));
    }
    for (int s = 1; s <= 3; ++s) {
      const double circle_norm = angular_integral(s, k0, k1, 0);
      for (int a = 0; a <= 12; ++a) {
        for (int b = 0; b <= 12; ++b) {
          const double numeric = angular_integral(s, k0, k1, a - b) / circle_norm;
          worst = std::max(worst, std::abs(numeric - circle_moment(GroupParam(s), a, b).eval(k0, k1)));
        }
      }
    }
  }
  out.require(worst < 1e-9, "quadrature deviation " + std::to_string(worst));
  for (int s = 1; s <= 3; ++s) {
    const GroupParam g(s);
    for (int n = 1; n <= 6; ++n) {
      for (Variant v : kVariants) {
        const MultiPoly f = f_of_power(n, v, s);
        out.require(inner_product(f, f, g) * lambda_const(n, v) == ParamRat(1),
                    "inverse norm constant " + where({{"s", s}, {"n", n}}) + variant_name(v));
      }
      const MultiPoly prev = f_of_power(n - 1, Variant::Full, s).shift({s, 0, 0, 0});
      out.require(inner_product(f_of_power(n, Variant::Full, s), prev, g) == nu_const(n),
                  "biorthogonal pairing " + where({{"s", s}, {"n", n}}));
    }
  }
  if (out.passed) {
    std::ostringstream os;
    os << "max quadrature deviation " << worst;
    out.detail = os.str();
  }
  return out;
}

}  // namespace

int main() {
  VerifyOptions defining;
  defining.max_degree = 6;
  VerifyOptions oracle;
  oracle.max_degree = 8;
  oracle.oracle_points = 5;
  oracle.seed = 20240601;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 golden formulas", golden},
      {"AC2 defining property", [&] { return from_report(verify_defining(defining)); }},
      {"AC3 oracle equivalence", [&] { return from_report(verify_oracle(oracle)); }},
      {"AC4 triple agreement", triple_agreement},
      {"AC5 hypergeometric layer", hypergeometric},
      {"AC6 harmonic layer", harmonic_layer},
      {"AC7 measure layer", measure_layer},
      {"AC8 singular suite", [] { return from_report(verify_singular(VerifyOptions{})); }},
  };

  bool all = true;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome res;
    try {
      res = run();
    } catch (const std::exception& e) {
      res.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && res.passed;
    std::cout << name << ": " << (res.passed ? "PASS" : "FAIL") << " (" << secs << " s";
    if (!res.detail.empty()) std::cout << "; " << res.detail;
    std::cout << ")\n";
  }
  return all ? 0 : 1;
}
