#include <doctest.h>

#include "baire/conditions.hpp"
#include "baire/demo.hpp"
#include "support.hpp"

using namespace baire;
using support::q;

namespace {

const TargetSet& square() {
  static const TargetSet t({Box{q(0), q(1), q(0), q(1)}});
  return t;
}

const TargetSet& hyperbola() {
  static const TargetSet t({Hyper{q(0), q(0), q(1), q(1)}});
  return t;
}

// Slice extent over x from the piece definitions: (nonempty, min, max, distinct values > 1).
struct OracleSlice {
  bool any = false;
  Rational lo, hi;
};

OracleSlice oracle_slice(const TargetSet& t, const Rational& x) {
  OracleSlice s;
  for (const auto& p : t.pieces()) {
    const auto part = support::piece_slice(p, x);
    if (!part) continue;
    if (!s.any) {
      s.any = true;
      s.lo = part->first;
      s.hi = part->second;
    } else {
      s.lo = min(s.lo, part->first);
      s.hi = max(s.hi, part->second);
    }
  }
  return s;
}

// Divergence directions of unbounded hyperbola pieces at x.
std::pair<bool, bool> oracle_infinities(const TargetSet& t, const Rational& x) {
  bool plus = false, minus = false;
  for (const auto& p : t.pieces()) {
    const auto* h = std::get_if<Hyper>(&p);
    if (!h || h->pole != x) continue;
    int dir = 0;
    if (h->x0 == x) dir = sgn(h->coef);
    if (h->x1 == x) dir = -sgn(h->coef);
    plus = plus || dir > 0;
    minus = minus || dir < 0;
  }
  return {plus, minus};
}

std::string witness(const Verdict& v, const std::string& name) {
  for (const auto& c : v.checks) {
    if (c.name == name) return c.witness.value_or("");
  }
  return "<missing>";
}

}  // namespace

TEST_CASE("empty slice set examples") {
  CHECK(empty_slice_set(square()).empty());
  CHECK(empty_slice_set(hyperbola()) == XSet::point(Real(0)));
  CHECK(empty_slice_set(TargetSet({Box{q(0), q(1, 4), q(0), q(0)}})).str() == "(1/4,1]");
}

TEST_CASE("multiplicity set examples") {
  const auto sq = multiplicity_sets(square(), 4);
  CHECK(sq.d == XSet::unit());
  CHECK(sq.d_n[0] == XSet::unit());

  const TargetSet line({PLine{{{q(0), q(0)}, {q(1, 2), q(1)}, {q(1), q(0)}}}});
  CHECK(multiplicity_sets(line).d.empty());

  const auto bp = multiplicity_sets(TargetSet({Box{q(0), q(1), q(0), q(0)}, Point{q(1, 2), q(1)}}), 3);
  CHECK(bp.d == XSet::point(Real(q(1, 2))));
  CHECK(bp.d_n[0] == XSet::point(Real(q(1, 2))));
  CHECK_FALSE(bp.residual);
}

TEST_CASE("residual flag for vanishing diameters") {
  // Two lines meeting at x = 0 have slices of arbitrarily small diameter.
  const TargetSet t({PLine{{{q(0), q(0)}, {q(1), q(1)}}}, PLine{{{q(0), q(0)}, {q(1), q(0)}}}});
  const auto m = multiplicity_sets(t, 8);
  CHECK(m.d.str() == "(0,1]");
  CHECK(m.residual);
  CHECK(m.d_n[0] == XSet::point(Real(1)));
}

TEST_CASE("extended multiplicity set examples") {
  CHECK(extended_multiplicity_set(TargetSet({Hyper{q(0), q(0), q(1), q(1)}, Point{q(0), q(0)}})) ==
        XSet::point(Real(0)));
  CHECK(extended_multiplicity_set(hyperbola()).empty());
  CHECK(extended_multiplicity_set(sect6_set(10)).empty());
  // Opposite divergence on the two sides of a pole.
  const TargetSet both({Hyper{q(1, 2), q(0), q(1, 2), q(1)}, Hyper{q(1, 2), q(1, 2), q(1), q(1)}});
  CHECK(extended_multiplicity_set(both) == XSet::point(Real(q(1, 2))));
}

TEST_CASE("meagerness examples") {
  CHECK(is_meager(XSet()).meager);
  CHECK(is_meager(XSet::point(Real(q(1, 2))).unite(XSet::point(Real(q(1, 3))))).meager);
  const auto r = is_meager(XSet::closed(Real(q(1, 4)), Real(q(1, 2))));
  CHECK_FALSE(r.meager);
  REQUIRE(r.witness);
  CHECK(r.witness->str() == "[1/4,1/2]");
}

TEST_CASE("check_regime examples") {
  CHECK(check_regime(square(), Regime::B2Bounded).passed);
  const Verdict b1b = check_regime(square(), Regime::B1Bounded);
  CHECK_FALSE(b1b.passed);
  CHECK(witness(b1b, "meager_D") == "[0,1]");
  CHECK(check_regime(hyperbola(), Regime::B1).passed);
  CHECK(check_regime(sect6_set(10), Regime::B1).passed);
}

TEST_CASE("regime verdict table") {
  struct Row {
    std::string demo;
    bool expect[4];  // b2-bounded, b2, b1-bounded, b1
  };
  const Row rows[] = {{"constant", {true, true, true, true}},
                      {"square", {true, true, false, false}},
                      {"hyperbola", {false, true, false, true}},
                      {"sect6", {false, true, false, true}}};
  for (const auto& row : rows) {
    for (unsigned depth : {3u, 10u}) {
      const TargetSet t = demo_set(row.demo, depth);
      for (int i = 0; i < 4; ++i) {
        CAPTURE(row.demo);
        CAPTURE(i);
        CHECK(check_regime(t, kAllRegimes[i]).passed == row.expect[i]);
      }
    }
  }
  const Verdict hb = check_regime(demo_set("hyperbola", 10), Regime::B2Bounded);
  CHECK(witness(hb, "bounded") == "pole x=0");
}

TEST_CASE("verdict rendering") {
  const Verdict v = check_regime(square(), Regime::B1Bounded);
  CHECK(v.render() ==
        "CHECK bounded PASS\nCHECK closed PASS\nCHECK nonempty_slices PASS\n"
        "CHECK meager_D FAIL witness=[0,1]\nREGIME b1-bounded FAIL\n");
  for (Regime r : kAllRegimes) CHECK(parse_regime(to_string(r)) == r);
  CHECK_FALSE(parse_regime("b3").has_value());
}

TEST_CASE("every failed check carries a witness") {
  support::Gen g(201);
  for (int trial = 0; trial < 100; ++trial) {
    const TargetSet t = g.set();
    for (Regime r : kAllRegimes) {
      const Verdict v = check_regime(t, r);
      bool all = true;
      for (const auto& c : v.checks) {
        all = all && c.passed;
        if (!c.passed) CHECK(c.witness.has_value());
      }
      CHECK(v.passed == all);
    }
  }
}

TEST_CASE("property: D and D_n agree with a brute-force slice scan") {
  support::Gen g(202);
  const unsigned n_max = 6;
  for (int trial = 0; trial < 150; ++trial) {
    const TargetSet t = g.set();
    const auto m = multiplicity_sets(t, n_max);
    for (const auto& x : support::probes(t, 61)) {
      const OracleSlice s = oracle_slice(t, x);
      CHECK(m.d.contains(Real(x)) == (s.any && s.lo != s.hi));
      for (unsigned n = 1; n <= n_max; ++n) {
        CHECK(m.d_n[n - 1].contains(Real(x)) == (s.any && s.hi - s.lo >= q(1, n)));
      }
    }
  }
}

TEST_CASE("property: extended multiplicity agrees with a breakpoint scan") {
  support::Gen g(203);
  for (int trial = 0; trial < 150; ++trial) {
    const TargetSet t = g.set();
    const XSet ext = extended_multiplicity_set(t);
    for (const auto& x : support::probes(t, 37)) {
      const OracleSlice s = oracle_slice(t, x);
      const auto [plus, minus] = oracle_infinities(t, x);
      const int elements = (s.any ? (s.lo == s.hi ? 1 : 2) : 0) + (plus ? 1 : 0) + (minus ? 1 : 0);
      CHECK(ext.contains(Real(x)) == (elements > 1));
    }
  }
}

TEST_CASE("property: D_n increase with n and stay inside D") {
  support::Gen g(204);
  for (int trial = 0; trial < 100; ++trial) {
    const TargetSet t = g.set();
    const auto m = multiplicity_sets(t, 10);
    bool every_meager = true;
    for (std::size_t k = 0; k < m.d_n.size(); ++k) {
      CHECK(m.d_n[k].subset_of(m.d));
      if (k + 1 < m.d_n.size()) CHECK(m.d_n[k].subset_of(m.d_n[k + 1]));
      every_meager = every_meager && is_meager(m.d_n[k]).meager;
    }
    // For piece sets a non-meager D has a part of positive minimal diameter,
    // except where two curves cross, which D_n for small n cannot see.
    if (!m.residual) CHECK(is_meager(m.d).meager == every_meager);
    if (!is_meager(m.d).meager && every_meager) CHECK(m.residual);
  }
}

TEST_CASE("property: regime implications and projection complement") {
  support::Gen g(205);
  for (int trial = 0; trial < 200; ++trial) {
    const TargetSet t = g.set();
    const bool b2b = check_regime(t, Regime::B2Bounded).passed;
    const bool b2 = check_regime(t, Regime::B2).passed;
    const bool b1b = check_regime(t, Regime::B1Bounded).passed;
    const bool b1 = check_regime(t, Regime::B1).passed;
    if (b1b) CHECK(b2b);
    if (b1) CHECK(b2);
    if (b2b) CHECK(b2);
    CHECK(empty_slice_set(t).unite(x_projection(t)) == XSet::unit());
    CHECK(empty_slice_set(t).intersect(x_projection(t)).empty());
  }
}
