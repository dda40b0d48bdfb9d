#include "dunkl/linear_form.hpp"

#include <stdexcept>

namespace dunkl {

namespace {

long to_long_checked(const mpz_class& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("linear form coefficient exceeds long");
  return v.get_si();
}

std::string signed_term(const mpz_class& coef, const char* var, bool first) {
  std::string out;
  mpz_class mag = abs(coef);
  if (coef < 0) {
    out += first ? "-" : " - ";
  } else if (!first) {
    out += " + ";
  }
  if (var == nullptr) return out + mag.get_str();
  if (mag != 1) out += mag.get_str() + "*";
  return out + var;
}

}  // namespace

std::pair<ExactScalar, LinearForm> LinearForm::normalize(const Affine& value) {
  if (value.is_zero()) throw std::domain_error("zero linear form");
  const mpz_class lden = value.c.get_den();
  mpz_class a = mpz_class(value.a) * lden;
  mpz_class b = mpz_class(value.b) * lden;
  mpz_class c = value.c.get_num();
  mpz_class g = gcd(gcd(a, b), c);
  if (g < 0) g = -g;
  a /= g;
  b /= g;
  c /= g;
  int sign = 1;
  if (a != 0) {
    sign = a > 0 ? 1 : -1;
  } else if (b != 0) {
    sign = b > 0 ? 1 : -1;
  } else {
    sign = c > 0 ? 1 : -1;
  }
  if (sign < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  ExactScalar factor(g, lden);
  factor.canonicalize();
  if (sign < 0) factor = -factor;
  return {factor, LinearForm(to_long_checked(a), to_long_checked(b), ExactScalar(c))};
}

std::string LinearForm::to_string(const char* v0, const char* v1) const {
  std::string out;
  bool first = true;
  if (a_ != 0) {
    out += signed_term(mpz_class(a_), v0, first);
    first = false;
  }
  if (b_ != 0) {
    out += signed_term(mpz_class(b_), v1, first);
    first = false;
  }
  if (c_ != 0 || first) out += signed_term(c_.get_num(), nullptr, first);
  return out;
}

}  // namespace dunkl
