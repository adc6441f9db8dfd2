#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace baire {

using Rational = mpq_class;

// Accepts "p", "p/q" and plain decimals such as "-0.125". Returns nullopt on
// anything else (including a zero denominator).
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

// Exact value of a finite double.
Rational from_double(double d);

// num/den in lowest terms; the two-argument mpq_class constructor does not reduce.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Smallest integer >= q.
long ceil_to_long(const Rational& q);

// 2^-k as an exact rational.
Rational dyadic(unsigned k);

}  // namespace baire
