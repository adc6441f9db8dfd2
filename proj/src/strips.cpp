#include "baire/strips.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "baire/format.hpp"

namespace baire {

namespace {

Real abs_diff(const Rational& a, const Rational& b) { return Real(abs(Rational(a - b))); }

// Distance from x to an interval domain, as a lower bound used for pruning.
Real distance_to(const XInterval& dom, const Rational& x) {
  const Real rx(x);
  if (rx < dom.lo) return dom.lo - rx;
  if (dom.hi < rx) return rx - dom.hi;
  return Real(0);
}

struct ScheduleContext {
  const SynthFunction& f;
  bool b1;
  bool unbounded;
  std::vector<Rational> a;  // a_1..a_N
  std::vector<Rational> c;  // c_1..c_N
  std::vector<XSet> d_n;    // Baire-1 regimes
};

class Radius {
 public:
  explicit Radius(Real start) : e_(std::move(start)) {}
  void limit(const Real& d) {
    if (d < e_) e_ = d;
  }
  const Real& value() const { return e_; }

 private:
  Real e_;
};

void separate_from(Radius& e, const Rational& x, const std::vector<Rational>& pts, unsigned n) {
  for (std::size_t j = 0; j < pts.size() && j < n; ++j) {
    if (pts[j] != x) e.limit(abs_diff(x, pts[j]));
  }
}

// Points r near x where the backbone exceeds y + 1/n, restricted to x's level
// part in unbounded regimes.
void overlap(Radius& e, const ScheduleContext& ctx, const Center& cen, unsigned n) {
  const Rational t = cen.y + Rational(1, n);
  const auto& bs = ctx.f.branch_cache;
  XSet bad;
  if (!ctx.unbounded) {
    for (const auto& b : bs) {
      if (!(distance_to(b.domain, cen.x) < e.value())) continue;
      bad = bad.unite(solve(b.upper, Rel::GreaterEq, t, b.domain));
    }
  } else {
    const unsigned k = level_of(ctx.f.target, cen.x, ctx.f.levels);
    if (t > k) return;
    for (const auto& b : bs) {
      if (!(distance_to(b.domain, cen.x) < e.value())) continue;
      bad = bad.unite(solve(b.upper, Rel::GreaterEq, t, b.domain)
                          .intersect(solve(b.lower, Rel::LessEq, Rational(k), b.domain)));
    }
    if (k <= ctx.f.levels.v.size()) {
      bad = bad.intersect(ctx.f.levels.v[k - 1]);
    } else {
      bad = bad.minus(ctx.f.levels.u.back());
    }
  }
  if (auto d = bad.distance(Real(cen.x))) e.limit(*d);
}

Real radius(const ScheduleContext& ctx, const Center& cen, unsigned n, const Real& prev) {
  Radius e(min(Real(Rational(1, n)), prev));
  const Real rx(cen.x);
  switch (cen.kind) {
    case CenterKind::C:
      separate_from(e, cen.x, ctx.c, n);
      if (ctx.b1) separate_from(e, cen.x, ctx.a, n);
      break;
    case CenterKind::A:
      separate_from(e, cen.x, ctx.a, n);
      if (auto d = ctx.d_n[n - 1].distance(rx)) e.limit(*d);
      if (ctx.unbounded) separate_from(e, cen.x, ctx.c, n);
      break;
    case CenterKind::Backbone: {
      if (ctx.b1) separate_from(e, cen.x, ctx.a, n);
      if (ctx.unbounded) {
        separate_from(e, cen.x, ctx.c, n);
        const auto& w = ctx.f.levels.w;
        for (std::size_t m = 0; m < w.size() && m < n; ++m) {
          if (w[m].contains(rx)) continue;
          e.limit(*XSet::interval(w[m]).distance(rx));
        }
      }
      overlap(e, ctx, cen, n);
      break;
    }
  }
  if (e.value().sign() <= 0) {
    throw ScheduleInfeasible("no admissible radius at x=" + to_string(cen.x) + ", n=" + std::to_string(n));
  }
  return e.value();
}

}  // namespace

std::vector<Rational> uniform_grid(unsigned m) {
  std::vector<Rational> g;
  for (unsigned k = 0; k <= m; ++k) g.push_back(ratio(k, m));
  return g;
}

std::vector<Center> strip_centers(const SynthFunction& f, const std::vector<Rational>& grid) {
  const bool b1 = is_baire1(f.regime);
  std::map<Rational, Center> by_x;
  std::size_t k = 0;
  for (const auto& p : f.approx.enumeration()) {
    ++k;
    if (b1) {
      by_x.emplace(p.x, Center{p.x, p.y, CenterKind::A, k});
    } else {
      by_x.emplace(p.x, Center{p.x, evaluate_backbone(f, p.x), CenterKind::Backbone, 0});
    }
  }
  for (const auto& c : f.c_enum) by_x.emplace(c.x, Center{c.x, c.value, CenterKind::C, c.index});
  for (const auto& x : grid) {
    if (by_x.count(x)) continue;
    by_x.emplace(x, Center{x, evaluate_backbone(f, x), CenterKind::Backbone, 0});
  }
  std::vector<Center> out;
  out.reserve(by_x.size());
  for (auto& [x, c] : by_x) out.push_back(std::move(c));
  return out;
}

EpsilonSchedule epsilon_schedule(const SynthFunction& f, std::vector<Center> centers, unsigned depth) {
  std::sort(centers.begin(), centers.end(), [](const Center& a, const Center& b) { return a.x < b.x; });
  ScheduleContext ctx{f, is_baire1(f.regime), !is_bounded(f.regime), {}, {}, {}};
  const auto a_all = f.approx.enumeration();
  for (std::size_t j = 0; j < a_all.size() && j < depth; ++j) ctx.a.push_back(a_all[j].x);
  for (std::size_t j = 0; j < f.c_enum.size() && j < depth; ++j) ctx.c.push_back(f.c_enum[j].x);
  if (ctx.b1) ctx.d_n = multiplicity_sets(f.target, depth).d_n;

  EpsilonSchedule s;
  s.depth = depth;
  s.eps.assign(depth, std::vector<Real>(centers.size()));
  for (std::size_t i = 0; i < centers.size(); ++i) {
    Real prev(1);
    for (unsigned n = 1; n <= depth; ++n) {
      prev = radius(ctx, centers[i], n, prev);
      s.eps[n - 1][i] = prev;
    }
  }
  s.centers = std::move(centers);
  return s;
}

StripLevel build_strip(const EpsilonSchedule& sched, const std::vector<Rational>& columns, unsigned n) {
  const auto& cs = sched.centers;
  std::vector<double> cx(cs.size());
  std::vector<double> cy(cs.size());
  std::vector<double> ce(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    cx[i] = to_double(cs[i].x);
    cy[i] = to_double(cs[i].y);
    ce[i] = sched.at(i, n).to_double();
  }
  const double reach = 1.0 / n + 1e-9;

  StripLevel level;
  level.n = n;
  for (const auto& x : columns) {
    const double xd = to_double(x);
    StripColumn col;
    col.x = x;
    col.lo = std::numeric_limits<double>::infinity();
    col.hi = -col.lo;
    col.y_min = col.lo;
    col.y_max = col.hi;
    auto first = std::lower_bound(cx.begin(), cx.end(), xd - reach);
    for (auto it = first; it != cx.end() && *it <= xd + reach; ++it) {
      const std::size_t i = static_cast<std::size_t>(it - cx.begin());
      const double dx = std::fabs(cx[i] - xd);
      bool meets = dx < ce[i];
      if (std::fabs(dx - ce[i]) <= 1e-12 * std::max(1.0, ce[i])) {
        meets = abs_diff(cs[i].x, x) < sched.at(i, n);
      }
      if (!meets) continue;
      const double hw = std::sqrt(std::max(0.0, ce[i] * ce[i] - dx * dx));
      col.lo = std::min(col.lo, cy[i] - hw);
      col.hi = std::max(col.hi, cy[i] + hw);
      col.y_min = std::min(col.y_min, cy[i]);
      col.y_max = std::max(col.y_max, cy[i]);
      ++col.chords;
    }
    if (col.chords == 0) {
      std::size_t best = 0;
      double best_dx = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < cs.size(); ++i) {
        const double dx = std::fabs(cx[i] - xd);
        if (dx < best_dx) {
          best_dx = dx;
          best = i;
        }
      }
      col.lo = cy[best] - ce[best];
      col.hi = cy[best] + ce[best];
      col.y_min = col.y_max = cy[best];
      col.inherited = true;
    }
    level.columns.push_back(std::move(col));
  }
  return level;
}

StripFamily build_strips(const EpsilonSchedule& sched) {
  std::vector<Rational> columns;
  columns.reserve(sched.centers.size());
  for (const auto& c : sched.centers) columns.push_back(c.x);
  StripFamily fam;
  for (unsigned n = 1; n <= sched.depth; ++n) fam.levels.push_back(build_strip(sched, columns, n));
  return fam;
}

std::string StripLevelReport::render(int precision) const {
  auto width = [&](double w) { return w < 0 ? std::string("-") : format_double(w, precision); };
  std::ostringstream os;
  os << "STRIP n=" << n << " nesting=" << (nesting ? "OK" : "FAIL") << " coverage=" << (coverage ? "OK" : "FAIL")
     << " max_width_A=" << width(max_width_a) << " max_width_C=" << width(max_width_c)
     << " shrink=" << (shrink ? "OK" : "FAIL");
  return os.str();
}

bool StripReport::passed() const {
  return std::all_of(levels.begin(), levels.end(), [](const StripLevelReport& l) {
    return l.nesting && l.coverage && l.shrink && l.continuity;
  });
}

std::string StripReport::render(int precision) const {
  std::string out;
  for (const auto& l : levels) out += l.render(precision) + "\n";
  return out;
}

StripReport verify_strips(const StripFamily& family, const EpsilonSchedule& sched, const SynthFunction& f) {
  std::map<Rational, std::size_t> center_at;
  for (std::size_t i = 0; i < sched.centers.size(); ++i) center_at.emplace(sched.centers[i].x, i);
  const XSet d = multiplicity_sets(f.target, 1).d;

  StripReport report;
  const StripLevel* prev = nullptr;
  for (const auto& level : family.levels) {
    StripLevelReport r;
    r.n = level.n;
    const double bound = 2.0 / level.n + kWidthTolerance;
    for (std::size_t i = 0; i < level.columns.size(); ++i) {
      const auto& col = level.columns[i];
      const auto it = center_at.find(col.x);
      if (it == center_at.end()) continue;
      const Center& cen = sched.centers[it->second];
      const double y = to_double(cen.y);
      const double width = col.hi - col.lo;
      if (!(col.lo < y && y < col.hi)) r.coverage = false;
      if (prev && i < prev->columns.size() && prev->columns[i].x == col.x) {
        if (col.lo < prev->columns[i].lo || col.hi > prev->columns[i].hi) r.nesting = false;
      }
      const bool collapses = cen.kind != CenterKind::Backbone && cen.index <= level.n;
      if (collapses) {
        double& mx = cen.kind == CenterKind::A ? r.max_width_a : r.max_width_c;
        mx = std::max(mx, width);
        if (width > bound || col.chords != 1) r.shrink = false;
      } else if (cen.kind == CenterKind::Backbone && !d.contains(Real(col.x))) {
        const double osc = std::max(col.y_max - y, y - col.y_min);
        if (width > bound + 2 * osc) r.continuity = false;
      }
    }
    report.levels.push_back(r);
    prev = &level;
  }
  return report;
}

std::string strip_csv(const StripLevel& level, int precision) {
  std::string out = "x,lo,hi\n";
  for (const auto& c : level.columns) {
    out += format_double(to_double(c.x), precision) + "," + format_double(c.lo, precision) + "," +
           format_double(c.hi, precision) + "\n";
  }
  return out;
}

}  // namespace baire
