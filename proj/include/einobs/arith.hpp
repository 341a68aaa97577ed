#pragma once

// Exact integers and rationals (GMP) plus rational-endpoint enclosures of
// the few irrational quantities the library needs (cube roots, pi^2).

#include <gmpxx.h>

#include <string>

namespace einobs {

using Integer = mpz_class;
using Rational = mpq_class;

// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& v) { return {v, v}; }

  bool is_point() const { return lo == hi; }
  bool certainly_positive() const { return lo > 0; }
  bool certainly_nonpositive() const { return hi <= 0; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator+(const Interval& a, const Rational& b);
Interval operator-(const Interval& a, const Rational& b);
// Scaling by a rational of either sign.
Interval operator*(const Rational& c, const Interval& a);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Enclosure of x^(2/3) for x >= 0. Perfect cubes give a point interval;
// otherwise the real cube root is bracketed with MPFR at `bits` of
// precision using round-down / round-up and then squared.
Interval cube_root_squared(const Integer& x, unsigned bits);

// Enclosure of pi^2 at `bits` of precision with directed rounding.
Interval pi_squared(unsigned bits);

// True when v fits in a signed 64-bit integer.
bool fits_int64(const Integer& v);
long long to_int64(const Integer& v);

std::string to_string(const Integer& v);
// "p" when integral, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& q);
// Parses "p" or "p/q" (optional sign on p). Throws Error(kInvalidArgument).
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

// Fixed-point decimal with `significant` digits, rounded half-to-even.
// Never uses scientific notation.
std::string to_decimal(const Rational& q, int significant);

}  // namespace einobs
