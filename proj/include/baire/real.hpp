#pragma once

#include <compare>
#include <string>

#include "baire/rational.hpp"

namespace baire {

/// Exact real of the form a + b*sqrt(d) with rational a, b and d >= 0.
///
/// Roots of quadratics with rational coefficients land here, so interval
/// endpoints produced by pairwise curve comparisons stay exact. Ordering is
/// total and exact between any two values. Arithmetic is only defined between
/// values sharing the same radicand (or when one side is rational); mixing two
/// different radicands throws std::domain_error.
class Real {
 public:
  Real() = default;
  Real(const Rational& q) : a_(q) {}  // NOLINT(google-explicit-constructor)
  Real(long v) : a_(v) {}             // NOLINT(google-explicit-constructor)

  static Real with_sqrt(const Rational& a, const Rational& b, const Rational& d);

  bool is_rational() const { return b_ == 0; }
  const Rational& rational_part() const { return a_; }
  const Rational& surd_coef() const { return b_; }
  const Rational& radicand() const { return d_; }

  bool compatible(const Real& other) const {
    return is_rational() || other.is_rational() || d_ == other.d_;
  }

  int sign() const;
  double to_double() const;
  std::string str() const;

  Real operator-() const;
  Real abs() const { return sign() < 0 ? -*this : *this; }

  friend Real operator+(const Real& x, const Real& y);
  friend Real operator-(const Real& x, const Real& y);
  friend Real operator*(const Real& x, const Real& y);

  friend std::strong_ordering operator<=>(const Real& x, const Real& y);
  friend bool operator==(const Real& x, const Real& y) {
    return (x <=> y) == std::strong_ordering::equal;
  }

 private:
  Rational a_;
  Rational b_;
  Rational d_;
  void normalize();
};

// Midpoint of two compatible values.
Real midpoint(const Real& x, const Real& y);

inline const Real& min(const Real& x, const Real& y) { return y < x ? y : x; }
inline const Real& max(const Real& x, const Real& y) { return x < y ? y : x; }

}  // namespace baire
