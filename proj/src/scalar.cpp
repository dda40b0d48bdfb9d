#include "dunkl/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace dunkl {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("empty integer in scalar");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw std::invalid_argument("malformed scalar: " + std::string(text));
    }
  }
  std::string digits(text);
  if (digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

ExactScalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return ExactScalar(parse_integer(text));
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in scalar");
  ExactScalar q(num, den);
  q.canonicalize();
  return q;
}

std::string format_scalar(const ExactScalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string format_scalar_short(const ExactScalar& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return format_scalar(x);
}

ExactScalar factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return ExactScalar(r);
}

ExactScalar pow2(int e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return ExactScalar(p);
  return ExactScalar(mpz_class(1), p);
}

ExactScalar binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return ExactScalar(r);
}

}  // namespace dunkl
