#include "baire/synthesis.hpp"

#include <algorithm>
#include <set>

namespace baire {

namespace {

std::optional<Rational> on_piece_y(const Piece& piece, const Rational& x, const Rational& y) {
  if (const auto* p = std::get_if<Point>(&piece)) {
    if (x == p->x) return y;
  } else if (const auto* b = std::get_if<Box>(&piece)) {
    if (b->x0 <= x && x <= b->x1) return y;
  } else if (const auto* l = std::get_if<PLine>(&piece)) {
    const auto& vs = l->vertices;
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
      if (vs[k].x <= x && x <= vs[k + 1].x) return Curve::through(vs[k], vs[k + 1])(x);
    }
  } else if (const auto* h = std::get_if<Hyper>(&piece)) {
    const bool lo_ok = h->pole_at_left() ? h->x0 < x : h->x0 <= x;
    const bool hi_ok = h->pole_at_right() ? x < h->x1 : x <= h->x1;
    if (lo_ok && hi_ok) return Curve::hyperbolic(h->coef, h->pole)(x);
  }
  return std::nullopt;
}

bool degenerate_in_x(const Piece& piece) {
  if (std::holds_alternative<Point>(piece)) return true;
  const auto* b = std::get_if<Box>(&piece);
  return b && b->x0 == b->x1;
}

// Moves p to a fresh x outside `avoid`, along the piece when possible, by at
// most sqrt(max_shift2).
RPoint place(const Piece& piece, const RPoint& p, const Rational& max_shift2, const XSet& avoid,
             std::set<Rational>& used) {
  const Rational step = dyadic(24);
  const int passes = degenerate_in_x(piece) ? 1 : 2;
  for (int pass = passes == 1 ? 1 : 0; pass < 2; ++pass) {
    for (long i = 0;; ++i) {
      const Rational dx = step * i;
      if (dx * dx > max_shift2) break;
      bool any_on_piece = false;
      for (int s : {1, -1}) {
        if (i == 0 && s < 0) continue;
        const Rational x = p.x + dx * s;
        const auto y_on = on_piece_y(piece, x, p.y);
        any_on_piece = any_on_piece || y_on.has_value();
        if (sgn(x) < 0 || x > 1) continue;
        if (pass == 0 && !y_on) continue;
        if (used.count(x) || avoid.contains(Real(x))) continue;
        const Rational y = y_on ? *y_on : p.y;
        const Rational dy = y - p.y;
        if (dx * dx + dy * dy > max_shift2) continue;
        used.insert(x);
        return {x, y};
      }
      if (pass == 0 && !any_on_piece) break;
    }
  }
  throw std::runtime_error("lemma31_net: no admissible representative near x=" + to_string(p.x));
}

// Geometric splitting of a component of V_n into closed parts.
void closed_parts(const XInterval& part, unsigned depth, std::vector<XInterval>& out) {
  if (part.lo_closed && part.hi_closed) {
    out.push_back(part);
    return;
  }
  const Real& a = part.lo;
  const Real& b = part.hi;
  if (!part.lo_closed && !part.hi_closed) {
    const Real m = midpoint(a, b);
    closed_parts({a, m, false, true}, depth, out);
    closed_parts({m, b, true, false}, depth, out);
    return;
  }
  const Real len = b - a;
  for (unsigned j = 1; j <= depth; ++j) {
    const Real outer = len * Real(dyadic(j - 1));
    const Real inner = len * Real(dyadic(j));
    if (part.lo_closed) {
      out.push_back(XInterval::closed(b - outer, b - inner));
    } else {
      out.push_back(XInterval::closed(a + inner, a + outer));
    }
  }
}

unsigned direct_level(const SliceSet& s) {
  const long n = ceil_to_long(s.min_abs());
  return static_cast<unsigned>(std::max(1L, n));
}

unsigned level_from(const SliceSet& s, const Rational& x, const LevelSets& levels) {
  const Real rx(x);
  for (std::size_t n = 0; n < levels.u.size(); ++n) {
    if (levels.u[n].contains(rx)) return static_cast<unsigned>(n + 1);
  }
  return direct_level(s);
}

Rational unbounded_backbone(const SliceSet& s, const Rational& x, const LevelSets& levels) {
  if (s.empty()) throw EmptySlice(x);
  const unsigned n = level_from(s, x, levels);
  return *s.max_within(Rational(n));
}

}  // namespace

std::vector<RPoint> CountableApprox::enumeration() const {
  std::vector<RPoint> out;
  for (const auto& h : levels) out.insert(out.end(), h.begin(), h.end());
  return out;
}

std::size_t CountableApprox::size() const {
  std::size_t n = 0;
  for (const auto& h : levels) n += h.size();
  return n;
}

CountableApprox lemma31_net(const TargetSet& t, unsigned depth, const XSet& avoid) {
  if (t.empty()) throw std::invalid_argument("lemma31_net: empty target set");
  CountableApprox net;
  net.depth = depth;
  std::set<Rational> used;
  for (unsigned n = 1; n <= depth; ++n) {
    const Rational spacing(1, 2 * n);
    const Rational max_shift2 = Rational(1, 16 * n * n);
    std::vector<RPoint> h;
    for (const auto& piece : t.pieces()) {
      for (const auto& p : cover_points(piece, Rational(n), spacing)) {
        h.push_back(place(piece, p, max_shift2, avoid, used));
      }
    }
    net.levels.push_back(std::move(h));
  }
  return net;
}

Rational f0_bounded(const TargetSet& t, const Rational& x) {
  const SliceSet s = slice(t, x);
  if (s.empty()) throw EmptySlice(x);
  return s.max();
}

LevelSets u_sets(const TargetSet& t, unsigned depth) {
  const auto bs = branches(t);
  LevelSets l;
  for (unsigned n = 1; n <= depth; ++n) {
    const Rational bound(n);
    XSet u;
    for (const auto& b : bs) {
      u = u.unite(solve(b.lower, Rel::LessEq, bound, b.domain)
                      .intersect(solve(b.upper, Rel::GreaterEq, Rational(-bound), b.domain)));
    }
    l.v.push_back(n == 1 ? u : u.minus(l.u.back()));
    l.u.push_back(std::move(u));
  }
  struct Tagged {
    unsigned level;
    XInterval part;
  };
  std::vector<Tagged> all;
  for (unsigned n = 1; n <= depth; ++n) {
    std::vector<XInterval> parts;
    for (const auto& comp : l.v[n - 1].parts()) closed_parts(comp, depth, parts);
    for (auto& p : parts) all.push_back({n, std::move(p)});
  }
  std::stable_sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.part.lo < b.part.lo;
  });
  for (auto& tg : all) {
    l.w.push_back(std::move(tg.part));
    l.w_level.push_back(tg.level);
  }
  return l;
}

unsigned level_of(const TargetSet& t, const Rational& x, const LevelSets& levels) {
  const SliceSet s = slice(t, x);
  if (s.empty()) throw EmptySlice(x);
  return level_from(s, x, levels);
}

Rational f0_unbounded(const TargetSet& t, const Rational& x, const LevelSets& levels) {
  return unbounded_backbone(slice(t, x), x, levels);
}

std::vector<CValue> f_on_C(const std::vector<Rational>& c_order, const TargetSet& t, bool signed_variant) {
  std::vector<CValue> out;
  for (std::size_t i = 0; i < c_order.size(); ++i) {
    const unsigned n = static_cast<unsigned>(i + 1);
    CValue c{c_order[i], n, Rational(n), false};
    if (signed_variant) {
      const ExtendedSlice e = extended_slice(t, c.x);
      if (!e.plus_inf && e.minus_inf) {
        c.value = -c.value;
      } else if (!e.plus_inf && !e.minus_inf) {
        c.sign_defaulted = true;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

SynthFunction synthesize(const TargetSet& t, Regime r, unsigned depth, bool signed_variant,
                         const std::optional<std::vector<Rational>>& c_order) {
  Verdict v = check_regime(t, r);
  if (!v.passed) throw RegimeUnsatisfied(std::move(v));

  SynthFunction f;
  f.regime = r;
  f.target = t;
  f.depth = depth;
  f.signed_variant = signed_variant;
  f.branch_cache = branches(t);
  f.c_set = empty_slice_set(t);

  std::vector<Rational> c_points;
  for (const auto& p : f.c_set.points()) c_points.push_back(p.rational_part());
  if (c_order) {
    std::vector<Rational> given = *c_order;
    std::sort(given.begin(), given.end());
    if (given != c_points) throw std::invalid_argument("synthesize: C order does not enumerate C");
    c_points = *c_order;
  }

  XSet avoid;
  switch (r) {
    case Regime::B2Bounded: break;
    case Regime::B2: avoid = f.c_set; break;
    case Regime::B1Bounded: avoid = multiplicity_sets(t, 1).d; break;
    case Regime::B1: avoid = f.c_set.unite(extended_multiplicity_set(t)); break;
  }
  f.approx = lemma31_net(t, depth, avoid);

  if (!is_bounded(r)) {
    f.levels = u_sets(t, depth);
    f.c_enum = f_on_C(c_points, t, signed_variant);
  }

  std::size_t k = 0;
  for (const auto& h : f.approx.levels) {
    for (const auto& p : h) {
      f.a_value.emplace(p.x, p.y);
      f.a_index.emplace(p.x, ++k);
    }
  }
  for (std::size_t i = 0; i < f.c_enum.size(); ++i) f.c_index.emplace(f.c_enum[i].x, i);
  return f;
}

bool in_A(const SynthFunction& f, const Rational& x) { return f.a_value.count(x) > 0; }
bool in_C(const SynthFunction& f, const Rational& x) { return f.c_index.count(x) > 0; }

Rational evaluate(const SynthFunction& f, const Rational& x) {
  if (auto it = f.a_value.find(x); it != f.a_value.end()) return it->second;
  return evaluate_backbone(f, x);
}

Rational evaluate_backbone(const SynthFunction& f, const Rational& x) {
  if (auto it = f.c_index.find(x); it != f.c_index.end()) return f.c_enum[it->second].value;
  const SliceSet s = slice(f.branch_cache, x);
  if (is_bounded(f.regime)) {
    if (s.empty()) throw EmptySlice(x);
    return s.max();
  }
  return unbounded_backbone(s, x, f.levels);
}

}  // namespace baire
