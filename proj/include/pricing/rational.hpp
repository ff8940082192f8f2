#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "pricing/errors.hpp"

namespace pricing {

// Exact rational scalar, the only number type in the library. GMP keeps
// values canonical (denominator > 0, gcd(|num|, den) = 1) after every
// operation, which is what makes all revenue comparisons tolerance-free.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q", a plain integer, or a decimal string with finite expansion
// ("3.25", "-0.5"). Throws ParseError on anything else or on q = 0.
Rational parse_rational(std::string_view text);

// Canonical textual form: "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rational& r);

// Decimal approximation with exactly `digits` fractional digits, rounded
// half away from zero. Annotation only; never feeds back into arithmetic.
std::string decimal_string(const Rational& r, int digits);

// Checked division; GMP itself traps on a zero divisor, so every division
// whose denominator is data-dependent goes through here.
Rational checked_div(const Rational& a, const Rational& b);

// p^e for integer e (negative allowed when p != 0).
Rational rational_pow(const Rational& base, long exponent);

// mpq_class(num, den) does not reduce the fraction, and GMP comparisons
// assume canonical operands. Any rational built from a data-dependent
// numerator/denominator pair must go through here.
inline Rational make_rational(long num, long den) {
  if (den == 0) throw ParseError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string join_rationals(const std::vector<Rational>& v, const std::string& sep = ", ");

}  // namespace pricing
