#include "baire/set_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace baire {

namespace {

bool in_unit(const Rational& x) { return sgn(x) >= 0 && x <= 1; }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using Poly = std::array<Rational, 3>;

Poly poly_mul(const Poly& p, const Poly& q) {
  // Callers only multiply polynomials whose product has degree <= 2.
  Poly r{Rational(0), Rational(0), Rational(0)};
  for (int i = 0; i < 3; ++i) {
    if (p[i] == 0) continue;
    for (int j = 0; i + j < 3; ++j) r[i + j] += p[i] * q[j];
  }
  return r;
}

Poly poly_sub(const Poly& p, const Poly& q) {
  return {Rational(p[0] - q[0]), Rational(p[1] - q[1]), Rational(p[2] - q[2])};
}

Poly poly_scale(const Poly& p, const Rational& s) {
  return {Rational(p[0] * s), Rational(p[1] * s), Rational(p[2] * s)};
}

Rational poly_eval(const Poly& p, const Rational& x) { return p[0] + x * (p[1] + x * p[2]); }

Real poly_eval(const Poly& p, const Real& x) {
  return Real(p[0]) + x * (Real(p[1]) + x * Real(p[2]));
}

Poly numerator(const Curve& c) {
  if (c.kind == Curve::Kind::Linear) return {c.b, c.a, Rational(0)};
  return {c.a, Rational(0), Rational(0)};
}

Poly denominator(const Curve& c) {
  if (c.kind == Curve::Kind::Linear) return {Rational(1), Rational(0), Rational(0)};
  return {Rational(-c.b), Rational(1), Rational(0)};
}

bool satisfies(int s, Rel rel) {
  switch (rel) {
    case Rel::Less: return s < 0;
    case Rel::LessEq: return s <= 0;
    case Rel::Greater: return s > 0;
    case Rel::GreaterEq: return s >= 0;
  }
  return false;
}

// Real roots of p (ascending), as exact values.
std::vector<Real> real_roots(const Poly& p) {
  if (p[2] != 0) {
    const Rational disc = p[1] * p[1] - 4 * p[2] * p[0];
    const Rational center = -p[1] / (2 * p[2]);
    if (sgn(disc) < 0) return {};
    if (sgn(disc) == 0) return {Real(center)};
    const Rational half = Rational(1) / (2 * abs(p[2]));
    return {Real::with_sqrt(center, -half, disc), Real::with_sqrt(center, half, disc)};
  }
  if (p[1] != 0) return {Real(Rational(-p[0] / p[1]))};
  return {};
}

const Rational& rational_endpoint(const Real& r) {
  if (!r.is_rational()) throw std::invalid_argument("solve: domain endpoints must be rational");
  return r.rational_part();
}

// ---- floating-point helpers for distances -------------------------------

using DPoly = std::vector<double>;

double dpoly_eval(const DPoly& p, double x) {
  double v = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

DPoly dpoly_deriv(const DPoly& p) {
  DPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<double>(i));
  return d;
}

// Real roots in [lo, hi] by recursive isolation between critical points and
// bisection on each monotone bracket.
std::vector<double> bracketed_roots(DPoly p, double lo, double hi) {
  while (p.size() > 1 && p.back() == 0.0) p.pop_back();
  if (p.size() <= 1) return {};
  if (p.size() == 2) {
    const double r = -p[0] / p[1];
    if (r >= lo && r <= hi) return {r};
    return {};
  }
  std::vector<double> cuts{lo};
  for (double c : bracketed_roots(dpoly_deriv(p), lo, hi)) cuts.push_back(c);
  cuts.push_back(hi);

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double a = cuts[i];
    double b = cuts[i + 1];
    double fa = dpoly_eval(p, a);
    const double fb = dpoly_eval(p, b);
    if (fa == 0.0) {
      roots.push_back(a);
      continue;
    }
    if (fa * fb > 0.0) continue;
    for (int it = 0; it < 200 && b - a > 1e-16 * std::max(1.0, std::fabs(a)); ++it) {
      const double m = 0.5 * (a + b);
      const double fm = dpoly_eval(p, m);
      if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    roots.push_back(0.5 * (a + b));
  }
  return roots;
}

double segment_distance(double px, double py, double ax, double ay, double bx, double by) {
  const double dx = bx - ax;
  const double dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(px - (ax + t * dx), py - (ay + t * dy));
}

double hyper_distance(double px, double py, const Hyper& h) {
  const double p = to_double(h.pole);
  const double c = to_double(h.coef);
  const double ulo = to_double(h.x0) - p;
  const double uhi = to_double(h.x1) - p;
  const double X = px - p;
  auto dist2 = [&](double u) {
    const double dy = c / u - py;
    return (u - X) * (u - X) + dy * dy;
  };
  // Stationary points of the squared distance: u^4 - X u^3 + c*py*u - c^2 = 0.
  const DPoly q{-c * c, c * py, 0.0, -X, 1.0};
  double best = std::numeric_limits<double>::infinity();
  for (double u : bracketed_roots(q, ulo, uhi)) {
    if (u != 0.0) best = std::min(best, dist2(u));
  }
  if (!h.pole_at_left()) best = std::min(best, dist2(ulo));
  if (!h.pole_at_right()) best = std::min(best, dist2(uhi));
  return std::sqrt(best);
}

Rational dyadic_at_most(const Rational& spacing) {
  unsigned k = 0;
  Rational g(1);
  while (g > spacing) {
    ++k;
    g = dyadic(k);
  }
  return g;
}

// {lo} U {k*g strictly inside} U {hi}.
std::vector<Rational> dyadic_coords(const Rational& lo, const Rational& hi, const Rational& g) {
  std::vector<Rational> out{lo};
  if (hi == lo) return out;
  mpz_class k;
  const Rational q = lo / g;
  mpz_fdiv_q(k.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  for (++k;; ++k) {
    Rational v = Rational(k) * g;
    if (v >= hi) break;
    if (v > lo) out.push_back(v);
  }
  out.push_back(hi);
  return out;
}

void cover_graph(const Curve& curve, const XInterval& dom, const Rational& y_cap,
                 const Rational& spacing, std::vector<RPoint>& out) {
  const XSet clip = solve(curve, Rel::LessEq, y_cap, dom).intersect(
      solve(curve, Rel::GreaterEq, Rational(-y_cap), dom));
  for (const auto& part : clip.parts()) {
    const Rational& l = rational_endpoint(part.lo);
    const Rational& r = rational_endpoint(part.hi);
    if (l == r) {
      out.push_back({l, curve(l)});
      continue;
    }
    std::set<Rational> xs;
    struct Cell {
      mpz_class k;
      unsigned j;
    };
    std::vector<Cell> stack{{mpz_class(0), 0}};
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      const Rational w = dyadic(c.j);
      const Rational a = Rational(c.k) * w;
      const Rational b = a + w;
      const Rational lo = max(a, l);
      const Rational hi = min(b, r);
      if (lo >= hi) continue;
      const Rational arc = (hi - lo) + abs(Rational(curve(hi) - curve(lo)));
      if (arc <= spacing || c.j >= 64) {
        xs.insert(lo);
        xs.insert(hi);
        continue;
      }
      stack.push_back({c.k * 2 + 1, c.j + 1});
      stack.push_back({c.k * 2, c.j + 1});
    }
    for (const auto& x : xs) out.push_back({x, curve(x)});
  }
}

}  // namespace

// ---- pieces ----------------------------------------------------------------

std::optional<std::string> validate(const Piece& piece) {
  return std::visit(
      overloaded{
          [](const Point& p) -> std::optional<std::string> {
            if (!in_unit(p.x)) return "point: x outside [0,1]";
            return std::nullopt;
          },
          [](const Box& b) -> std::optional<std::string> {
            if (!in_unit(b.x0) || !in_unit(b.x1)) return "box: x outside [0,1]";
            if (b.x0 > b.x1) return "box: x0 > x1";
            if (b.y0 > b.y1) return "box: y0 > y1";
            return std::nullopt;
          },
          [](const PLine& l) -> std::optional<std::string> {
            if (l.vertices.size() < 2) return "pline: needs at least two vertices";
            for (std::size_t i = 0; i < l.vertices.size(); ++i) {
              if (!in_unit(l.vertices[i].x)) return "pline: x outside [0,1]";
              if (i > 0 && !(l.vertices[i - 1].x < l.vertices[i].x))
                return "pline: x coordinates must strictly increase";
            }
            return std::nullopt;
          },
          [](const Hyper& h) -> std::optional<std::string> {
            if (!in_unit(h.x0) || !in_unit(h.x1)) return "hyper: x outside [0,1]";
            if (!(h.x0 < h.x1)) return "hyper: requires x0 < x1";
            if (h.coef == 0) return "hyper: coefficient must be nonzero";
            if (h.x0 < h.pole && h.pole < h.x1) return "hyper: pole strictly inside (x0,x1)";
            return std::nullopt;
          },
      },
      piece);
}

TargetSet::TargetSet(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  for (const auto& p : pieces_) {
    if (auto err = validate(p)) throw InvalidPiece(*err);
  }
}

bool TargetSet::bounded() const {
  return std::none_of(pieces_.begin(), pieces_.end(), [](const Piece& p) {
    const auto* h = std::get_if<Hyper>(&p);
    return h && h->unbounded();
  });
}

TargetSet TargetSet::unite(const TargetSet& other) const {
  std::vector<Piece> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return TargetSet(std::move(all));
}

Curve Curve::through(const RPoint& p, const RPoint& q) {
  const Rational slope = (q.y - p.y) / (q.x - p.x);
  return linear(slope, Rational(p.y - slope * p.x));
}

Rational Curve::operator()(const Rational& x) const {
  if (kind == Kind::Linear) return a * x + b;
  if (x == b) throw std::domain_error("Curve: evaluated at pole");
  return a / (x - b);
}

bool Branch::unbounded_left() const {
  return upper.kind == Curve::Kind::Hyperbolic && !domain.lo_closed;
}

bool Branch::unbounded_right() const {
  return upper.kind == Curve::Kind::Hyperbolic && !domain.hi_closed;
}

std::vector<Branch> branches(const TargetSet& t) {
  std::vector<Branch> out;
  for (std::size_t i = 0; i < t.pieces().size(); ++i) {
    std::visit(overloaded{
                   [&](const Point& p) {
                     const Curve c = Curve::constant(p.y);
                     out.push_back({XInterval::point(Real(p.x)), c, c, true, i});
                   },
                   [&](const Box& b) {
                     out.push_back({XInterval::closed(Real(b.x0), Real(b.x1)), Curve::constant(b.y0),
                                    Curve::constant(b.y1), b.y0 == b.y1, i});
                   },
                   [&](const PLine& l) {
                     for (std::size_t k = 0; k + 1 < l.vertices.size(); ++k) {
                       const Curve c = Curve::through(l.vertices[k], l.vertices[k + 1]);
                       out.push_back({XInterval::closed(Real(l.vertices[k].x), Real(l.vertices[k + 1].x)),
                                      c, c, true, i});
                     }
                   },
                   [&](const Hyper& h) {
                     const Curve c = Curve::hyperbolic(h.coef, h.pole);
                     XInterval dom{Real(h.x0), Real(h.x1), !h.pole_at_left(), !h.pole_at_right()};
                     out.push_back({dom, c, c, true, i});
                   },
               },
               t.pieces()[i]);
  }
  return out;
}

XSet solve(const Curve& g, const Curve& h, Rel rel, const Rational& t, const XInterval& dom) {
  if (dom.empty()) return {};
  const Rational& lo = rational_endpoint(dom.lo);
  const Rational& hi = rational_endpoint(dom.hi);
  if (lo == hi) {
    const int s = sgn(Rational(g(lo) - h(lo) - t));
    return satisfies(s, rel) ? XSet::point(dom.lo) : XSet{};
  }

  // g - h - t = P / Q with Q = Dg*Dh nonvanishing on the open domain.
  const Poly dg = denominator(g);
  const Poly dh = denominator(h);
  const Poly q = poly_mul(dg, dh);
  Poly p = poly_sub(poly_sub(poly_mul(numerator(g), dh), poly_mul(numerator(h), dg)),
                    poly_scale(q, t));
  const Rational mid = (lo + hi) / 2;
  const int qs = sgn(poly_eval(q, mid));
  if (qs == 0) throw std::domain_error("solve: pole inside domain");
  if (qs < 0) p = poly_scale(p, Rational(-1));

  std::vector<Real> cuts{dom.lo};
  for (auto& r : real_roots(p)) {
    if (dom.lo < r && r < dom.hi) cuts.push_back(r);
  }
  cuts.push_back(dom.hi);

  std::vector<XInterval> parts;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const bool endpoint_excluded = (i == 0 && !dom.lo_closed) || (i + 1 == cuts.size() && !dom.hi_closed);
    if (!endpoint_excluded && satisfies(poly_eval(p, cuts[i]).sign(), rel)) {
      parts.push_back(XInterval::point(cuts[i]));
    }
    if (i + 1 < cuts.size()) {
      const Real m = midpoint(cuts[i], cuts[i + 1]);
      if (satisfies(poly_eval(p, m).sign(), rel)) {
        parts.push_back({cuts[i], cuts[i + 1], false, false});
      }
    }
  }
  return XSet::from_parts(std::move(parts));
}

// ---- slices ----------------------------------------------------------------

SliceSet SliceSet::from_intervals(std::vector<YInterval> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const YInterval& a, const YInterval& b) { return a.lo < b.lo; });
  SliceSet s;
  for (auto& p : parts) {
    if (p.hi < p.lo) continue;
    if (!s.parts_.empty() && p.lo <= s.parts_.back().hi) {
      if (p.hi > s.parts_.back().hi) s.parts_.back().hi = p.hi;
    } else {
      s.parts_.push_back(std::move(p));
    }
  }
  return s;
}

bool SliceSet::contains(const Rational& y) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const YInterval& p) { return p.lo <= y && y <= p.hi; });
}

const Rational& SliceSet::max() const { return parts_.back().hi; }
const Rational& SliceSet::min() const { return parts_.front().lo; }

Rational SliceSet::diameter() const {
  if (parts_.empty()) return Rational(0);
  return max() - min();
}

Rational SliceSet::min_abs() const {
  Rational best = abs(parts_.front().lo);
  for (const auto& p : parts_) {
    if (sgn(p.lo) <= 0 && sgn(p.hi) >= 0) return Rational(0);
    best = baire::min(best, baire::min(abs(p.lo), abs(p.hi)));
  }
  return best;
}

std::optional<Rational> SliceSet::max_within(const Rational& bound) const {
  std::optional<Rational> best;
  for (const auto& p : parts_) {
    if (p.lo > bound || p.hi < -bound) continue;
    best = baire::min(p.hi, bound);
  }
  return best;
}

SliceSet SliceSet::unite(const SliceSet& other) const {
  std::vector<YInterval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return from_intervals(std::move(all));
}

std::string SliceSet::str() const {
  if (parts_.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << " U ";
    if (parts_[i].lo == parts_[i].hi) {
      os << "{" << to_string(parts_[i].lo) << "}";
    } else {
      os << "[" << to_string(parts_[i].lo) << "," << to_string(parts_[i].hi) << "]";
    }
  }
  return os.str();
}

bool ExtendedSlice::multiple() const {
  int count = finite.empty() ? 0 : (finite.singleton() ? 1 : 2);
  count += plus_inf ? 1 : 0;
  count += minus_inf ? 1 : 0;
  return count > 1;
}

std::string ExtendedSlice::str() const {
  std::string s = finite.str();
  if (minus_inf) s += " U {-inf}";
  if (plus_inf) s += " U {+inf}";
  return s;
}

SliceSet slice(const TargetSet& t, const Rational& x) { return slice(branches(t), x); }

SliceSet slice(const std::vector<Branch>& bs, const Rational& x) {
  std::vector<YInterval> parts;
  const Real rx(x);
  for (const auto& b : bs) {
    if (b.domain.contains(rx)) parts.push_back({b.lower(x), b.upper(x)});
  }
  return SliceSet::from_intervals(std::move(parts));
}

std::vector<PoleEnd> pole_ends(const TargetSet& t) {
  std::vector<PoleEnd> out;
  for (const auto& piece : t.pieces()) {
    const auto* h = std::get_if<Hyper>(&piece);
    if (!h || !h->unbounded()) continue;
    // Right of the pole x - p > 0, left of it x - p < 0.
    const int dir = h->pole_at_left() ? sgn(h->coef) : -sgn(h->coef);
    out.push_back({h->pole, dir});
  }
  return out;
}

ExtendedSlice extended_slice(const TargetSet& t, const Rational& x) {
  // T is closed, so finite limits of nearby slices already lie in T(x).
  ExtendedSlice e{slice(t, x), false, false};
  for (const auto& pe : pole_ends(t)) {
    if (pe.x != x) continue;
    if (pe.direction > 0) {
      e.plus_inf = true;
    } else {
      e.minus_inf = true;
    }
  }
  return e;
}

XSet x_projection(const TargetSet& t) {
  std::vector<XInterval> parts;
  for (const auto& b : branches(t)) parts.push_back(b.domain);
  return XSet::from_parts(std::move(parts));
}

bool contains(const TargetSet& t, const Rational& x, const Rational& y) {
  return slice(t, x).contains(y);
}

double distance_point_to_piece(double px, double py, const Piece& piece) {
  return std::visit(
      overloaded{
          [&](const Point& p) { return std::hypot(px - to_double(p.x), py - to_double(p.y)); },
          [&](const Box& b) {
            const double dx = std::max({to_double(b.x0) - px, 0.0, px - to_double(b.x1)});
            const double dy = std::max({to_double(b.y0) - py, 0.0, py - to_double(b.y1)});
            return std::hypot(dx, dy);
          },
          [&](const PLine& l) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k + 1 < l.vertices.size(); ++k) {
              best = std::min(best, segment_distance(px, py, to_double(l.vertices[k].x),
                                                     to_double(l.vertices[k].y),
                                                     to_double(l.vertices[k + 1].x),
                                                     to_double(l.vertices[k + 1].y)));
            }
            return best;
          },
          [&](const Hyper& h) { return hyper_distance(px, py, h); },
      },
      piece);
}

double distance_point_to_set(double px, double py, const TargetSet& t) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& piece : t.pieces()) best = std::min(best, distance_point_to_piece(px, py, piece));
  return best;
}

double distance_point_to_set(const Rational& px, const Rational& py, const TargetSet& t) {
  if (in_unit(px) && contains(t, px, py)) return 0.0;
  return distance_point_to_set(to_double(px), to_double(py), t);
}

std::vector<RPoint> cover_points(const Piece& piece, const Rational& y_cap, const Rational& spacing) {
  std::vector<RPoint> out;
  std::visit(overloaded{
                 [&](const Point& p) {
                   if (abs(p.y) <= y_cap) out.push_back({p.x, p.y});
                 },
                 [&](const Box& b) {
                   const Rational ylo = max(b.y0, Rational(-y_cap));
                   const Rational yhi = min(b.y1, y_cap);
                   if (ylo > yhi) return;
                   const Rational g = dyadic_at_most(spacing);
                   const auto xs = dyadic_coords(b.x0, b.x1, g);
                   const auto ys = dyadic_coords(ylo, yhi, g);
                   for (const auto& x : xs) {
                     for (const auto& y : ys) out.push_back({x, y});
                   }
                 },
                 [&](const PLine& l) {
                   for (std::size_t k = 0; k + 1 < l.vertices.size(); ++k) {
                     const Curve c = Curve::through(l.vertices[k], l.vertices[k + 1]);
                     std::vector<RPoint> seg;
                     cover_graph(c, XInterval::closed(Real(l.vertices[k].x), Real(l.vertices[k + 1].x)),
                                 y_cap, spacing, seg);
                     // Shared vertices appear once.
                     for (auto& p : seg) {
                       if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
                     }
                   }
                 },
                 [&](const Hyper& h) {
                   XInterval dom{Real(h.x0), Real(h.x1), !h.pole_at_left(), !h.pole_at_right()};
                   cover_graph(Curve::hyperbolic(h.coef, h.pole), dom, y_cap, spacing, out);
                 },
             },
             piece);
  return out;
}

std::vector<RPoint> cover_points(const TargetSet& t, const Rational& y_cap, const Rational& spacing) {
  std::vector<RPoint> out;
  for (const auto& piece : t.pieces()) {
    auto pts = cover_points(piece, y_cap, spacing);
    out.insert(out.end(), pts.begin(), pts.end());
  }
  return out;
}

}  // namespace baire
