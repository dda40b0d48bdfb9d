#pragma once

#include "dunkl/scalar.hpp"

#include <compare>
#include <string>
#include <utility>

namespace dunkl {

/// The exact value a*k0 + b*k1 + c. Used wherever a parameter of a formula is
/// "a linear form in the two parameters or a constant", e.g. k0 + 1/2 or
/// s*k0 + s*k1 + 1. Unlike LinearForm it is not normalized.
struct Affine {
  long a = 0;
  long b = 0;
  ExactScalar c = 0;

  Affine() = default;
  Affine(long a_, long b_, ExactScalar c_) : a(a_), b(b_), c(std::move(c_)) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  Affine(ExactScalar constant) : c(std::move(constant)) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  Affine(long constant) : c(constant) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  Affine(int constant) : c(constant) {}

  static Affine k0() { return {1, 0, 0}; }
  static Affine k1() { return {0, 1, 0}; }

  bool is_constant() const { return a == 0 && b == 0; }
  bool is_zero() const { return is_constant() && c == 0; }

  ExactScalar eval(const ExactScalar& k0, const ExactScalar& k1) const {
    return ExactScalar(a) * k0 + ExactScalar(b) * k1 + c;
  }
  double eval(double k0, double k1) const {
    return static_cast<double>(a) * k0 + static_cast<double>(b) * k1 + c.get_d();
  }

  Affine operator-() const { return {-a, -b, -c}; }
  friend Affine operator+(const Affine& x, const Affine& y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }
  friend Affine operator-(const Affine& x, const Affine& y) { return x + (-y); }
  friend Affine operator*(long k, const Affine& x) { return {k * x.a, k * x.b, ExactScalar(k) * x.c}; }

  friend bool operator==(const Affine& x, const Affine& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

/// A nonconstant linear form normalized so its integer data (a, b, c) is
/// primitive and the first nonzero of (a, b) is positive. Constant forms only
/// exist transiently as (0, 0, 1); they are folded into a scale factor.
class LinearForm {
 public:
  /// Splits a nonzero affine value into factor * form. Throws
  /// std::domain_error on the zero form.
  static std::pair<ExactScalar, LinearForm> normalize(const Affine& value);

  long a() const { return a_; }
  long b() const { return b_; }
  const ExactScalar& c() const { return c_; }
  bool is_constant() const { return a_ == 0 && b_ == 0; }

  Affine as_affine() const { return {a_, b_, c_}; }

  ExactScalar eval(const ExactScalar& k0, const ExactScalar& k1) const {
    return ExactScalar(a_) * k0 + ExactScalar(b_) * k1 + c_;
  }

  std::string to_string(const char* v0 = "k0", const char* v1 = "k1") const;

  friend std::strong_ordering operator<=>(const LinearForm& x, const LinearForm& y) {
    if (auto cmp = x.a_ <=> y.a_; cmp != 0) return cmp;
    if (auto cmp = x.b_ <=> y.b_; cmp != 0) return cmp;
    const int c = cmp(x.c_, y.c_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const LinearForm& x, const LinearForm& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  LinearForm(long a, long b, ExactScalar c) : a_(a), b_(b), c_(std::move(c)) {}

  long a_;
  long b_;
  ExactScalar c_;
};

}  // namespace dunkl
