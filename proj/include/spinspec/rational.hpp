#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spinspec {

/// Exact rational number. Every quantity in this library is computed with it.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" (canonicalized). Throws Error{ParseError}.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Truncated decimal rendering for display only.
std::string to_decimal(const Rational& q, int digits = 6);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace spinspec
