#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace piercing {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) as long
// as every value enters through parse_rational or arithmetic.
using Rational = mpq_class;

// Accepts "a", "-a", "a/b". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& value);

// Smallest integer >= value.
long ceil_to_long(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace piercing
