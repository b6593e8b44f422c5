#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace lelong {

/// Exact rational scalar. mpq_class keeps values canonical (positive
/// denominator, lowest terms) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in lowest terms. mpq_class(n, d) alone does not reduce.
inline Rational ratio(const Integer& n, const Integer& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Parses "p/q", "p" or "-p/q". Rejects zero denominators, whitespace and
/// anything else that is not a plain decimal fraction.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "7/15", "-3", "0".
std::string to_string(const Rational& value);

/// Bits needed for the larger of |numerator| and denominator.
std::size_t bit_size(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace lelong
