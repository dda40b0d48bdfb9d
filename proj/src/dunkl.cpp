#include "dunkl/dunkl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dunkl {

namespace {

int floor_div(int x, int y) {
  int q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

// k0 + (-1)^j k1, times the sign and s factor
ParamRat class_weight(int j, int factor) {
  return ParamRat(Affine(factor, (j % 2 == 0) ? factor : -factor, 0));
}

// T z^a zbar^b for a >= b, accumulated into out with coefficient c.
void t_mono_ge(int a, int b, const ParamRat& c, int s, MultiPoly& out) {
  if (a > 0) out.add_term({a - 1, b, 0, 0}, c * ParamRat(a));
  const int top = floor_div(a - b - 1, s);
  for (int j = 0; j <= top; ++j) {
    out.add_term({a - 1 - j * s, b + j * s, 0, 0}, c * class_weight(j, s));
  }
}

// Tbar z^a zbar^b for a >= b.
void tbar_mono_ge(int a, int b, const ParamRat& c, int s, MultiPoly& out) {
  if (b > 0) out.add_term({a, b - 1, 0, 0}, c * ParamRat(b));
  const int top = floor_div(a - b, s);
  for (int j = 1; j <= top; ++j) {
    out.add_term({a - j * s, b - 1 + j * s, 0, 0}, c * class_weight(j, -s));
  }
}

void require_arity2(const MultiPoly& f) {
  if (f.arity() != 2) throw std::invalid_argument("operator needs an arity-2 polynomial");
}

std::complex<double> cpow(std::complex<double> x, int e) {
  std::complex<double> r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

std::complex<double> eval2(const MultiPoly& f, std::complex<double> z, std::complex<double> zb, double k0,
                           double k1) {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : f.terms()) sum += c.eval(k0, k1) * cpow(z, e[0]) * cpow(zb, e[1]);
  return sum;
}

// Sum over reflections of (f(z) - f(sigma z)) / (z - zbar w^m), weighted.
std::complex<double> reflection_part(const MultiPoly& f, const GroupParam& g, std::complex<double> z0, double k0,
                                     double k1, bool bar) {
  const int s = g.s();
  const std::complex<double> zb = std::conj(z0);
  const std::complex<double> fz = eval2(f, z0, zb, k0, k1);
  std::complex<double> total = 0.0;
  for (int m = 0; m < 2 * s; ++m) {
    const std::complex<double> om = std::polar(1.0, std::numbers::pi * m / s);
    const std::complex<double> den = z0 - zb * om;
    if (std::abs(den) < 1e-6) throw MirrorProximityError("evaluation point lies on a mirror");
    const std::complex<double> reflected = eval2(f, zb * om, z0 / om, k0, k1);
    std::complex<double> term = (fz - reflected) / den;
    if (bar) term *= -om;
    total += (m % 2 == 0 ? k0 : k1) * term;
  }
  return total;
}

}  // namespace

GroupParam::GroupParam(int s) : s_(s) {
  if (s < 1) throw std::invalid_argument("s must be at least 1");
}

MultiPoly apply_T(const MultiPoly& f, const GroupParam& g) {
  require_arity2(f);
  MultiPoly out(2);
  for (const auto& [e, c] : f.terms()) {
    if (e[0] >= e[1]) {
      t_mono_ge(e[0], e[1], c, g.s(), out);
    } else {
      MultiPoly tmp(2);
      tbar_mono_ge(e[1], e[0], c, g.s(), tmp);
      out += tmp.conjugate_swap();
    }
  }
  return out;
}

MultiPoly apply_Tbar(const MultiPoly& f, const GroupParam& g) {
  require_arity2(f);
  MultiPoly out(2);
  for (const auto& [e, c] : f.terms()) {
    if (e[0] >= e[1]) {
      tbar_mono_ge(e[0], e[1], c, g.s(), out);
    } else {
      MultiPoly tmp(2);
      t_mono_ge(e[1], e[0], c, g.s(), tmp);
      out += tmp.conjugate_swap();
    }
  }
  return out;
}

MultiPoly laplacian(const MultiPoly& f, const GroupParam& g) {
  return apply_T(apply_Tbar(f, g), g) * ParamRat(4);
}

bool is_harmonic(const MultiPoly& f, const GroupParam& g) { return apply_T(apply_Tbar(f, g), g).is_zero(); }

MultiPoly partial_z(const MultiPoly& f) {
  require_arity2(f);
  MultiPoly out(2);
  for (const auto& [e, c] : f.terms()) {
    if (e[0] > 0) out.add_term({e[0] - 1, e[1], 0, 0}, c * ParamRat(e[0]));
  }
  return out;
}

MultiPoly partial_zbar(const MultiPoly& f) {
  require_arity2(f);
  MultiPoly out(2);
  for (const auto& [e, c] : f.terms()) {
    if (e[1] > 0) out.add_term({e[0], e[1] - 1, 0, 0}, c * ParamRat(e[1]));
  }
  return out;
}

std::complex<double> eval_at(const MultiPoly& f, std::complex<double> z0, double k0, double k1) {
  require_arity2(f);
  return eval2(f, z0, std::conj(z0), k0, k1);
}

std::complex<double> definitional_eval_T(const MultiPoly& f, const GroupParam& g, std::complex<double> z0,
                                         double k0, double k1) {
  require_arity2(f);
  return eval_at(partial_z(f), z0, k0, k1) + reflection_part(f, g, z0, k0, k1, false);
}

std::complex<double> definitional_eval_Tbar(const MultiPoly& f, const GroupParam& g, std::complex<double> z0,
                                            double k0, double k1) {
  require_arity2(f);
  return eval_at(partial_zbar(f), z0, k0, k1) + reflection_part(f, g, z0, k0, k1, true);
}

}  // namespace dunkl
