#pragma once

#include "dunkl/linear_form.hpp"
#include "dunkl/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace dunkl {

/// Polynomial in the two parameters (k0, k1) with exact rational coefficients.
/// No zero coefficient is ever stored.
class ParamPoly {
 public:
  /// (degree in k0, degree in k1)
  using Exponents = std::pair<int, int>;
  using TermMap = std::map<Exponents, ExactScalar>;

  ParamPoly() = default;
  explicit ParamPoly(const ExactScalar& constant);
  explicit ParamPoly(const Affine& value);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of k0^0 k1^0.
  ExactScalar constant_term() const;
  int total_degree() const;

  void add_term(int e0, int e1, const ExactScalar& c);

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ExactScalar& k);
  friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { return x += y; }
  friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { return x -= y; }
  friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y);
  friend ParamPoly operator*(ParamPoly x, const ExactScalar& k) { return x *= k; }
  friend ParamPoly operator*(const ExactScalar& k, ParamPoly x) { return x *= k; }
  friend bool operator==(const ParamPoly& x, const ParamPoly& y) { return x.terms_ == y.terms_; }

  /// Multiplication by a single affine factor; cheaper than the general product.
  ParamPoly times(const Affine& factor) const;

  ExactScalar eval(const ExactScalar& k0, const ExactScalar& k1) const;
  double eval(double k0, double k1) const;

  /// Exact quotient by a nonconstant linear form, or nullopt if it does not
  /// divide. A cheap evaluation on the zero line of the form rejects most
  /// non-divisors before the synthetic division runs.
  std::optional<ParamPoly> divide_exact(const LinearForm& form) const;
  bool divisible_by(const LinearForm& form) const;

  /// Positive rational g with (*this / g) having coprime integer coefficients.
  /// Returns 1 for the zero polynomial.
  ExactScalar content() const;

  /// Replaces (k0, k1) by two affine expressions in a fresh pair of variables.
  ParamPoly substitute(const Affine& r0, const Affine& r1) const;

  std::string to_string(const char* v0 = "k0", const char* v1 = "k1") const;

 private:
  TermMap terms_;
};

/// Rising factorial (base)_n = base (base+1) ... (base+n-1); (base)_0 = 1.
ParamPoly pochhammer(const Affine& base, int n);

}  // namespace dunkl
