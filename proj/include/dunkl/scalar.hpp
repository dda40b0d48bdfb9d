#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dunkl {

/// Arbitrary-precision rational; always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every arithmetic operation).
using ExactScalar = mpq_class;

/// Parses "p/q" or "p" (decimal, optional leading sign). Throws
/// std::invalid_argument on malformed input or a zero denominator.
ExactScalar parse_scalar(std::string_view text);

/// Always "p/q", even for integers, so the encoding is fixed-shape.
std::string format_scalar(const ExactScalar& x);

/// Shorter form used by the text renderer: "p" when q == 1.
std::string format_scalar_short(const ExactScalar& x);

ExactScalar factorial(int n);

/// 2^e for any integer e.
ExactScalar pow2(int e);

ExactScalar binomial(int n, int k);

inline bool is_integer(const ExactScalar& x) { return x.get_den() == 1; }

}  // namespace dunkl
