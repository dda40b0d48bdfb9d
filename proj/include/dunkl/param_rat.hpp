#pragma once

#include "dunkl/linear_form.hpp"
#include "dunkl/param_poly.hpp"
#include "dunkl/scalar.hpp"

#include <initializer_list>
#include <map>
#include <span>
#include <string>

namespace dunkl {

/// Element of Q(k0, k1) written as scale * num / prod(L_i^m_i) with every L_i a
/// normalized linear form.
///
/// Values are kept reduced: no denominator form divides the numerator, the
/// numerator has coprime integer coefficients and the scale is positive. The
/// representation is therefore canonical, but equality is still decided by
/// cross-multiplication so that unreduced inputs compare correctly too.
class ParamRat {
 public:
  using Denominator = std::map<LinearForm, int>;

  ParamRat() = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  ParamRat(int constant) : ParamRat(ExactScalar(constant)) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  ParamRat(long constant) : ParamRat(ExactScalar(constant)) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  ParamRat(const ExactScalar& constant);
  explicit ParamRat(const ParamPoly& poly);
  explicit ParamRat(const Affine& value);

  /// Builds num/den and cancels every denominator factor that divides num.
  static ParamRat reduce(ParamPoly num, Denominator den, const ExactScalar& scale = 1);

  /// c * prod(num) / prod(den) for affine factors. Identical factors cancel
  /// before anything is expanded. Throws DegenerateDenominator if a
  /// denominator factor is the zero constant.
  static ParamRat factored(const ExactScalar& c, std::span<const Affine> num, std::span<const Affine> den);
  static ParamRat factored(const ExactScalar& c, std::initializer_list<Affine> num,
                           std::initializer_list<Affine> den) {
    return factored(c, std::span<const Affine>(num.begin(), num.size()),
                    std::span<const Affine>(den.begin(), den.size()));
  }

  /// (base)_n
  static ParamRat rising(const Affine& base, int n);
  /// 1 / (base)_n, kept factored.
  static ParamRat inv_rising(const Affine& base, int n);

  const ParamPoly& num() const { return num_; }
  const Denominator& den() const { return den_; }
  const ExactScalar& scale() const { return scale_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  /// Value of a constant; precondition is_constant().
  ExactScalar constant_value() const { return scale_ * num_.constant_term(); }
  int multiplicity(const LinearForm& form) const;

  ParamRat operator-() const;
  ParamRat& operator+=(const ParamRat& other);
  ParamRat& operator-=(const ParamRat& other);
  ParamRat& operator*=(const ParamRat& other);
  friend ParamRat operator+(ParamRat x, const ParamRat& y) { return x += y; }
  friend ParamRat operator-(ParamRat x, const ParamRat& y) { return x -= y; }
  friend ParamRat operator*(const ParamRat& x, const ParamRat& y);
  /// Division is only available when the divisor's numerator is a constant,
  /// i.e. the divisor is a product of linear forms; otherwise std::domain_error.
  friend ParamRat operator/(const ParamRat& x, const ParamRat& y) { return x * y.inverse(); }
  friend bool operator==(const ParamRat& x, const ParamRat& y);

  ParamRat inverse() const;

  /// Exact value at (k0, k1). Throws PoleError on a vanishing denominator.
  ExactScalar specialize(const ExactScalar& k0, const ExactScalar& k1) const;
  double eval(double k0, double k1) const;

  /// Substitutes (k0, k1) -> (r0, r1), affine in a new pair of variables.
  /// Throws PoleError if a denominator form becomes identically zero.
  ParamRat substitute(const Affine& r0, const Affine& r1) const;

  std::string to_string(const char* v0 = "k0", const char* v1 = "k1") const;

 private:
  void canonicalize();

  ParamPoly num_;
  Denominator den_;
  ExactScalar scale_ = 1;
};

inline ParamRat rat_add(const ParamRat& x, const ParamRat& y) { return x + y; }
inline ParamRat rat_mul(const ParamRat& x, const ParamRat& y) { return x * y; }
inline ExactScalar specialize(const ParamRat& x, const ExactScalar& k0, const ExactScalar& k1) {
  return x.specialize(k0, k1);
}

}  // namespace dunkl
