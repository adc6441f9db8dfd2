#include "baire/real.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace baire {

namespace {

bool perfect_square(const mpz_class& v, mpz_class& root) {
  if (v < 0 || !mpz_perfect_square_p(v.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return true;
}

// sign(p + q*sqrt(r)), r >= 0.
int sign_surd(const Rational& p, const Rational& q, const Rational& r) {
  const int sp = sgn(p);
  const int sq = (sgn(r) == 0) ? 0 : sgn(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  const int c = sgn(Rational(p * p - q * q * r));
  if (c > 0) return sp;
  if (c < 0) return sq;
  return 0;
}

// sign(e1*sqrt(d1) + e2*sqrt(d2)).
int sign_two_surds(const Rational& e1, const Rational& d1, const Rational& e2,
                   const Rational& d2) {
  const int s1 = sgn(d1) == 0 ? 0 : sgn(e1);
  const int s2 = sgn(d2) == 0 ? 0 : sgn(e2);
  if (s1 == 0) return s2;
  if (s2 == 0 || s1 == s2) return s1;
  const int c = sgn(Rational(e1 * e1 * d1 - e2 * e2 * d2));
  if (c > 0) return s1;
  if (c < 0) return s2;
  return 0;
}

}  // namespace

Real Real::with_sqrt(const Rational& a, const Rational& b, const Rational& d) {
  if (sgn(d) < 0) throw std::domain_error("Real::with_sqrt: negative radicand");
  Real r;
  r.a_ = a;
  r.b_ = b;
  r.d_ = d;
  r.normalize();
  return r;
}

void Real::normalize() {
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  mpz_class rn, rd;
  if (perfect_square(d_.get_num(), rn) && perfect_square(d_.get_den(), rd)) {
    a_ += b_ * Rational(rn, rd);
    a_.canonicalize();
    b_ = 0;
    d_ = 0;
  }
}

int Real::sign() const { return sign_surd(a_, b_, d_); }

double Real::to_double() const {
  if (is_rational()) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

std::string Real::str() const {
  if (is_rational()) return to_string(a_);
  std::ostringstream os;
  if (a_ != 0) os << to_string(a_) << (sgn(b_) > 0 ? "+" : "");
  os << to_string(b_) << "*sqrt(" << to_string(d_) << ")";
  return os.str();
}

Real Real::operator-() const {
  Real r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

Real operator+(const Real& x, const Real& y) {
  if (!x.compatible(y)) throw std::domain_error("Real: incompatible radicands");
  const Rational& d = x.is_rational() ? y.d_ : x.d_;
  return Real::with_sqrt(x.a_ + y.a_, x.b_ + y.b_, d);
}

Real operator-(const Real& x, const Real& y) { return x + (-y); }

Real operator*(const Real& x, const Real& y) {
  if (!x.compatible(y)) throw std::domain_error("Real: incompatible radicands");
  const Rational& d = x.is_rational() ? y.d_ : x.d_;
  return Real::with_sqrt(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

std::strong_ordering operator<=>(const Real& x, const Real& y) {
  int s;
  if (x.compatible(y)) {
    s = (x - y).sign();
  } else {
    // u + e1*sqrt(d1) + e2*sqrt(d2) with u = a1 - a2, e2 = -b2.
    const Rational u = x.a_ - y.a_;
    const Rational e2 = -y.b_;
    const int st = sign_two_surds(x.b_, x.d_, e2, y.d_);
    const int su = sgn(u);
    if (st == 0) {
      s = su;
    } else if (su == 0 || su == st) {
      s = st;
    } else {
      // Compare u^2 against (e1*sqrt(d1) + e2*sqrt(d2))^2.
      const Rational p = u * u - x.b_ * x.b_ * x.d_ - e2 * e2 * y.d_;
      const Rational q = -2 * x.b_ * e2;
      const int t = sign_surd(p, q, Rational(x.d_ * y.d_));
      s = t > 0 ? su : (t < 0 ? st : 0);
    }
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Real midpoint(const Real& x, const Real& y) {
  return (x + y) * Real(Rational(1, 2));
}

}  // namespace baire
