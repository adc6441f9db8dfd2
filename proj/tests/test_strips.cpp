#include <doctest.h>

#include <cmath>

#include "baire/demo.hpp"
#include "baire/strips.hpp"
#include "support.hpp"

using namespace baire;
using support::q;

namespace {

struct Built {
  SynthFunction f;
  EpsilonSchedule sched;
  StripFamily family;
};

Built build(const TargetSet& t, Regime r, unsigned depth, unsigned grid, bool signed_variant = false,
            const std::optional<std::vector<Rational>>& order = std::nullopt) {
  Built b{synthesize(t, r, depth, signed_variant, order), {}, {}};
  b.sched = epsilon_schedule(b.f, strip_centers(b.f, uniform_grid(grid)), depth);
  b.family = build_strips(b.sched);
  return b;
}

Built build_demo(const std::string& name, Regime r, unsigned depth, unsigned grid, bool signed_variant = false) {
  return build(demo_set(name, depth), r, depth, grid, signed_variant, demo_c_order(name, depth));
}

std::size_t column_of(const EpsilonSchedule& s, const Rational& x) {
  for (std::size_t i = 0; i < s.centers.size(); ++i) {
    if (s.centers[i].x == x) return i;
  }
  FAIL("no column at " << to_string(x));
  return 0;
}

bool open_shadow_hits(const Rational& x, const Real& eps, const Rational& r) {
  return Real(abs(Rational(r - x))) < eps;
}

// Legality of every radius, checked against the mandated finite sets and by
// evaluating the backbone on a fine grid.
void check_schedule(const Built& b, unsigned probe_den) {
  const SynthFunction& f = b.f;
  const auto& s = b.sched;
  const bool b1 = is_baire1(f.regime);
  const bool unbounded = !is_bounded(f.regime);
  const auto a = f.approx.enumeration();
  const auto d_n = multiplicity_sets(f.target, s.depth).d_n;
  std::vector<Rational> probes;
  for (unsigned k = 0; k <= probe_den; ++k) probes.push_back(q(k, probe_den));

  for (std::size_t i = 0; i < s.centers.size(); ++i) {
    const Center& c = s.centers[i];
    for (unsigned n = 1; n <= s.depth; ++n) {
      const Real& e = s.at(i, n);
      CHECK(e.sign() > 0);
      CHECK(e <= Real(q(1, n)));
      if (n > 1) CHECK(e <= s.at(i, n - 1));
      auto excludes = [&](const Rational& p) { return p == c.x || !open_shadow_hits(c.x, e, p); };
      const bool separate_a = c.kind == CenterKind::A || b1;
      const bool separate_c = c.kind == CenterKind::C || unbounded;
      for (std::size_t j = 0; j < n && j < a.size(); ++j) {
        if (separate_a) CHECK(excludes(a[j].x));
      }
      for (std::size_t j = 0; j < n && j < f.c_enum.size(); ++j) {
        if (separate_c) CHECK(excludes(f.c_enum[j].x));
      }
      if (c.kind == CenterKind::A) {
        for (const auto& p : probes) {
          if (open_shadow_hits(c.x, e, p)) CHECK_FALSE(d_n[n - 1].contains(Real(p)));
        }
      }
      if (c.kind != CenterKind::Backbone) continue;
      for (const auto& r : probes) {
        if (!open_shadow_hits(c.x, e, r) || in_C(f, r)) continue;
        if (unbounded) {
          const unsigned k = level_of(f.target, c.x, f.levels);
          if (level_of(f.target, r, f.levels) != k) continue;
          for (std::size_t m = 0; m < f.levels.w.size() && m < n; ++m) {
            if (!f.levels.w[m].contains(Real(c.x))) CHECK_FALSE(f.levels.w[m].contains(Real(r)));
          }
        }
        CHECK(evaluate_backbone(f, r) - c.y < q(1, n));
      }
    }
  }
}

void check_family(const Built& b) {
  const StripReport rep = verify_strips(b.family, b.sched, b.f);
  for (const auto& l : rep.levels) {
    CAPTURE(l.n);
    CHECK(l.nesting);
    CHECK(l.coverage);
    CHECK(l.shrink);
  }
}

}  // namespace

TEST_CASE("chord of a single ball") {
  EpsilonSchedule s;
  s.depth = 1;
  s.centers = {Center{q(1, 2), q(0), CenterKind::Backbone, 0}};
  s.eps = {{Real(q(1, 4))}};
  const StripLevel l = build_strip(s, {q(1, 2), q(5, 8), q(1)}, 1);
  CHECK(l.columns[0].lo == doctest::Approx(-0.25));
  CHECK(l.columns[0].hi == doctest::Approx(0.25));
  CHECK(l.columns[0].chords == 1);
  CHECK(l.columns[1].hi == doctest::Approx(std::sqrt(3.0 / 64)));
  CHECK(l.columns[1].lo == doctest::Approx(-std::sqrt(3.0 / 64)));
  // Untouched column inherits the nearest ball.
  CHECK(l.columns[2].inherited);
  CHECK(l.columns[2].hi == doctest::Approx(0.25));
}

TEST_CASE("tangent column does not meet the open ball") {
  EpsilonSchedule s;
  s.depth = 1;
  s.centers = {Center{q(0), q(0), CenterKind::Backbone, 0}, Center{q(1, 2), q(3), CenterKind::Backbone, 0}};
  s.eps = {{Real(q(1, 2)), Real(q(1, 8))}};
  const StripLevel l = build_strip(s, {q(1, 2)}, 1);
  CHECK(l.columns[0].chords == 1);
  CHECK(l.columns[0].lo == doctest::Approx(3 - 0.125));
}

TEST_CASE("uniform grid") {
  const auto g = uniform_grid(4);
  REQUIRE(g.size() == 5);
  CHECK(g[2] == q(1, 2));
  CHECK(to_string(g[2]) == "1/2");
}

TEST_CASE("constant graph: radius is 1/n up to separations, widths at most 2/n") {
  const Built b = build_demo("constant", Regime::B2Bounded, 6, 64);
  const auto& s = b.sched;
  for (std::size_t i = 0; i < s.centers.size(); ++i) {
    for (unsigned n = 1; n <= 6; ++n) CHECK(s.at(i, n) <= Real(q(1, n)));
  }
  for (const auto& level : b.family.levels) {
    for (const auto& col : level.columns) CHECK(col.hi - col.lo <= 2.0 / level.n + kWidthTolerance);
  }
  check_family(b);
}

TEST_CASE("full square: backbone radii are not limited by overlap") {
  const Built b = build_demo("square", Regime::B2Bounded, 5, 64);
  for (std::size_t i = 0; i < b.sched.centers.size(); ++i) {
    for (unsigned n = 1; n <= 5; ++n) CHECK(b.sched.at(i, n) == Real(q(1, n)));
  }
  const std::size_t mid = column_of(b.sched, q(1, 2));
  for (const auto& level : b.family.levels) {
    const auto& col = level.columns[mid];
    CHECK(col.lo < 1.0);
    CHECK(1.0 < col.hi);
  }
  check_family(b);
}

TEST_CASE("tent-pole set: W separation against a grid scan") {
  const unsigned depth = 6;
  const Built b = build_demo("sect6", Regime::B2, depth, 128);
  const auto& f = b.f;
  const auto& s = b.sched;
  for (std::size_t i = 0; i < s.centers.size(); ++i) {
    const Center& c = s.centers[i];
    if (c.kind != CenterKind::Backbone) continue;
    for (unsigned n = 1; n <= depth; ++n) {
      const double e = s.at(i, n).to_double();
      for (long k = 0; k <= 7560; ++k) {
        const Rational r = q(k, 7560);
        if (std::fabs(r.get_d() - c.x.get_d()) > e + 1e-9 || !open_shadow_hits(c.x, s.at(i, n), r)) continue;
        for (std::size_t m = 0; m < f.levels.w.size() && m < n; ++m) {
          if (f.levels.w[m].contains(Real(c.x))) continue;
          CHECK_FALSE(f.levels.w[m].contains(Real(r)));
        }
      }
    }
  }
}

TEST_CASE("tent-pole set: C columns collapse") {
  const unsigned depth = 10;
  const Built b = build_demo("sect6", Regime::B1, depth, 64, true);
  const std::size_t zero = column_of(b.sched, q(0));
  const auto& last = b.family.levels.back().columns[zero];
  CHECK(last.hi - last.lo <= 0.2 + kWidthTolerance);
  CHECK(last.chords == 1);
  for (const auto& cv : b.f.c_enum) {
    const std::size_t col = column_of(b.sched, cv.x);
    for (const auto& level : b.family.levels) {
      if (level.n < cv.index) continue;
      CHECK(level.columns[col].chords == 1);
      CHECK(level.columns[col].hi - level.columns[col].lo <= 2.0 / level.n + kWidthTolerance);
    }
  }
  check_family(b);
}

TEST_CASE("schedule legality on the demos") {
  for (const auto& name : demo_names()) {
    for (Regime r : kAllRegimes) {
      const unsigned depth = 5;
      const TargetSet t = demo_set(name, depth);
      if (!check_regime(t, r).passed) continue;
      CAPTURE(name);
      CAPTURE(to_string(r));
      const Built b = build_demo(name, r, depth, 64);
      check_schedule(b, 128);
      check_family(b);
    }
  }
}

TEST_CASE("property: schedules exist and strips verify on random sets") {
  support::Gen g(401);
  int built = 0;
  for (int trial = 0; trial < 400 && built < 16; ++trial) {
    const TargetSet t = g.set(3);
    for (Regime r : kAllRegimes) {
      if (!check_regime(t, r).passed) continue;
      ++built;
      Built b;
      REQUIRE_NOTHROW(b = build(t, r, 4, 32));
      check_schedule(b, 64);
      check_family(b);
    }
  }
  CHECK(built >= 16);
}

TEST_CASE("strip report and csv rendering") {
  StripLevelReport r;
  r.n = 3;
  r.max_width_c = 0.5;
  CHECK(r.render() == "STRIP n=3 nesting=OK coverage=OK max_width_A=- max_width_C=0.5 shrink=OK");
  StripLevel l;
  l.columns.push_back(StripColumn{q(1, 4), -0.5, 1.0, 1, false, 0.0, 0.0});
  CHECK(strip_csv(l) == "x,lo,hi\n0.25,-0.5,1\n");
}
