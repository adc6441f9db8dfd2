#include "baire/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace baire {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    value = Rational(n, d);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    mpz_class n(whole.empty() ? std::string("0") : std::string(whole), 10);
    mpz_class scale = 1;
    for (char c : frac) {
      n = n * 10 + (c - '0');
      scale *= 10;
    }
    value = Rational(n, scale);
    value.canonicalize();
  } else {
    if (!all_digits(body)) return std::nullopt;
    value = Rational(mpz_class(std::string(body), 10));
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational from_double(double d) {
  if (!std::isfinite(d)) throw std::domain_error("from_double: non-finite value");
  return Rational(d);
}

long ceil_to_long(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

Rational dyadic(unsigned k) {
  mpz_class den = 1;
  den <<= k;
  return Rational(mpz_class(1), den);
}

}  // namespace baire
