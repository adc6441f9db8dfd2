#pragma once

// Seeded generators and brute-force oracles shared by the test binaries.
// Oracles here re-derive geometry from the piece definitions directly and do
// not call into the library's slicing or solving code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "baire/set_model.hpp"

namespace support {

using baire::Box;
using baire::Hyper;
using baire::Piece;
using baire::PLine;
using baire::Point;
using baire::Rational;
using baire::RPoint;
using baire::TargetSet;

inline Rational q(long num, long den = 1) { return baire::ratio(num, den); }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  // k/den with k in [lo*den, hi*den].
  Rational grid(long den, long lo, long hi) { return q(integer(lo * den, hi * den), den); }
  Rational unit(long den = 8) { return grid(den, 0, 1); }

  Piece piece() {
    switch (integer(0, 3)) {
      case 0:
        return Point{unit(), grid(4, -2, 2)};
      case 1: {
        Rational a = unit(), b = unit(), c = grid(4, -2, 2), d = grid(4, -2, 2);
        if (b < a) std::swap(a, b);
        if (d < c) std::swap(c, d);
        if (integer(0, 3) == 0) d = c;  // horizontal segment
        return Box{a, b, c, d};
      }
      case 2: {
        const long k = integer(2, 4);
        std::vector<long> xs;
        while (static_cast<long>(xs.size()) < k) {
          const long v = integer(0, 12);
          bool dup = false;
          for (long x : xs) dup = dup || x == v;
          if (!dup) xs.push_back(v);
        }
        std::sort(xs.begin(), xs.end());
        PLine l;
        for (long x : xs) l.vertices.push_back({q(x, 12), grid(4, -2, 2)});
        return l;
      }
      default: {
        Rational a = unit(), b = unit();
        while (a == b) b = unit();
        if (b < a) std::swap(a, b);
        Rational c = grid(2, -2, 2);
        if (c == 0) c = q(1);
        switch (integer(0, 2)) {
          case 0: return Hyper{a, a, b, c};
          case 1: return Hyper{b, a, b, c};
          default: return Hyper{b + q(1, 4), a, b, c};
        }
      }
    }
  }

  TargetSet set(long max_pieces = 4) {
    std::vector<Piece> ps;
    const long k = integer(1, max_pieces);
    for (long i = 0; i < k; ++i) ps.push_back(piece());
    return TargetSet(ps);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// [lo, hi] of the piece over x, if any.
inline std::optional<std::pair<Rational, Rational>> piece_slice(const Piece& piece, const Rational& x) {
  if (const auto* p = std::get_if<Point>(&piece)) {
    if (x == p->x) return std::make_pair(p->y, p->y);
  } else if (const auto* b = std::get_if<Box>(&piece)) {
    if (b->x0 <= x && x <= b->x1) return std::make_pair(b->y0, b->y1);
  } else if (const auto* l = std::get_if<PLine>(&piece)) {
    const auto& v = l->vertices;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      if (v[k].x <= x && x <= v[k + 1].x) {
        const Rational t = (x - v[k].x) / (v[k + 1].x - v[k].x);
        const Rational y = v[k].y + t * (v[k + 1].y - v[k].y);
        return std::make_pair(y, y);
      }
    }
  } else if (const auto* h = std::get_if<Hyper>(&piece)) {
    if (x < h->x0 || x > h->x1 || x == h->pole) return std::nullopt;
    const Rational y = h->coef / (x - h->pole);
    return std::make_pair(y, y);
  }
  return std::nullopt;
}

inline bool on_piece(const Piece& piece, const Rational& x, const Rational& y) {
  const auto s = piece_slice(piece, x);
  return s && s->first <= y && y <= s->second;
}

inline bool on_set(const TargetSet& t, const Rational& x, const Rational& y) {
  for (const auto& p : t.pieces()) {
    if (on_piece(p, x, y)) return true;
  }
  return false;
}

// All x-coordinates mentioned by the pieces, plus the ends of [0,1].
inline std::vector<Rational> breakpoints(const TargetSet& t) {
  std::vector<Rational> xs{q(0), q(1)};
  for (const auto& piece : t.pieces()) {
    if (const auto* p = std::get_if<Point>(&piece)) xs.push_back(p->x);
    if (const auto* b = std::get_if<Box>(&piece)) {
      xs.push_back(b->x0);
      xs.push_back(b->x1);
    }
    if (const auto* l = std::get_if<PLine>(&piece)) {
      for (const auto& v : l->vertices) xs.push_back(v.x);
    }
    if (const auto* h = std::get_if<Hyper>(&piece)) {
      xs.push_back(h->x0);
      xs.push_back(h->x1);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Breakpoints, midpoints between them, and a uniform k/den grid.
inline std::vector<Rational> probes(const TargetSet& t, long den = 97) {
  std::vector<Rational> xs = breakpoints(t);
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i + 1 < n; ++i) xs.push_back((xs[i] + xs[i + 1]) / 2);
  for (long k = 0; k <= den; ++k) xs.push_back(q(k, den));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Dense parametric sampling of one piece, for distance oracles.
inline double sampled_distance(double px, double py, const Piece& piece, int samples = 200000) {
  double best = INFINITY;
  auto consider = [&](double x, double y) { best = std::min(best, std::hypot(px - x, py - y)); };
  if (const auto* p = std::get_if<Point>(&piece)) {
    consider(p->x.get_d(), p->y.get_d());
  } else if (const auto* b = std::get_if<Box>(&piece)) {
    const double x = std::clamp(px, b->x0.get_d(), b->x1.get_d());
    const double y = std::clamp(py, b->y0.get_d(), b->y1.get_d());
    consider(x, y);
  } else if (const auto* l = std::get_if<PLine>(&piece)) {
    const auto& v = l->vertices;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      for (int i = 0; i <= samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        consider(v[k].x.get_d() + t * (v[k + 1].x.get_d() - v[k].x.get_d()),
                 v[k].y.get_d() + t * (v[k + 1].y.get_d() - v[k].y.get_d()));
      }
    }
  } else if (const auto* h = std::get_if<Hyper>(&piece)) {
    const double a = h->x0.get_d(), b = h->x1.get_d(), p = h->pole.get_d(), c = h->coef.get_d();
    // Sample in x, then resample densely around the best hit.
    double best_x = a;
    auto curve = [&](double x) { return c / (x - p); };
    auto scan = [&](double lo, double hi, int n) {
      for (int i = 0; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        if (x == p) continue;
        const double d = std::hypot(px - x, py - curve(x));
        if (d < best) {
          best = d;
          best_x = x;
        }
      }
    };
    scan(a, b, samples);
    const double step = (b - a) / samples;
    for (int round = 0; round < 4; ++round) {
      const double lo = std::max(a, best_x - 2 * step), hi = std::min(b, best_x + 2 * step);
      scan(lo, hi, 10000);
    }
  }
  return best;
}

inline double sampled_distance(double px, double py, const TargetSet& t, int samples = 200000) {
  double best = INFINITY;
  for (const auto& p : t.pieces()) best = std::min(best, sampled_distance(px, py, p, samples));
  return best;
}

// Distance to T_cap = T cut to |y| <= cap, by sampling each piece in x.
inline double sampled_distance_capped(double px, double py, const TargetSet& t, double cap, int samples = 20000) {
  double best = INFINITY;
  auto consider = [&](double x, double y) {
    if (std::fabs(y) <= cap) best = std::min(best, std::hypot(px - x, py - y));
  };
  for (const auto& piece : t.pieces()) {
    if (const auto* p = std::get_if<Point>(&piece)) {
      consider(p->x.get_d(), p->y.get_d());
    } else if (const auto* b = std::get_if<Box>(&piece)) {
      const double lo = std::max(b->y0.get_d(), -cap), hi = std::min(b->y1.get_d(), cap);
      if (lo > hi) continue;
      consider(std::clamp(px, b->x0.get_d(), b->x1.get_d()), std::clamp(py, lo, hi));
    } else if (const auto* l = std::get_if<PLine>(&piece)) {
      const auto& v = l->vertices;
      for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        const double ax = v[k].x.get_d(), ay = v[k].y.get_d();
        const double bx = v[k + 1].x.get_d(), by = v[k + 1].y.get_d();
        for (int i = 0; i <= samples; ++i) {
          const double u = static_cast<double>(i) / samples;
          consider(ax + u * (bx - ax), ay + u * (by - ay));
        }
      }
    } else if (const auto* h = std::get_if<Hyper>(&piece)) {
      const double a = h->x0.get_d(), b = h->x1.get_d(), p = h->pole.get_d(), c = h->coef.get_d();
      for (int i = 0; i <= samples; ++i) {
        const double x = a + (b - a) * i / samples;
        if (x != p) consider(x, c / (x - p));
      }
    }
  }
  return best;
}

}  // namespace support
