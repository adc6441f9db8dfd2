#include "baire/conditions.hpp"

#include <sstream>

namespace baire {

namespace {

// {x : max over branch pairs of upper_i(x) - lower_j(x) rel t}.
XSet spread_set(const std::vector<Branch>& bs, Rel rel, const Rational& t) {
  XSet out;
  for (const auto& bi : bs) {
    for (const auto& bj : bs) {
      const XInterval dom = bi.domain.intersect(bj.domain);
      if (dom.empty()) continue;
      out = out.unite(solve(bi.upper, bj.lower, rel, t, dom));
    }
  }
  return out;
}

Check structural_closed() { return {"closed", true, std::nullopt}; }

Check bounded_check(const TargetSet& t) {
  for (const auto& pe : pole_ends(t)) {
    return {"bounded", false, "pole x=" + to_string(pe.x)};
  }
  return {"bounded", true, std::nullopt};
}

Check nonempty_slices_check(const TargetSet& t) {
  const XSet c = empty_slice_set(t);
  if (c.empty()) return {"nonempty_slices", true, std::nullopt};
  return {"nonempty_slices", false, c.str()};
}

Check countable_check(const std::string& name, const XSet& s) {
  const MeagerResult m = is_meager(s);
  if (m.meager) return {name, true, std::nullopt};
  return {name, false, m.witness->str()};
}

}  // namespace

std::string to_string(Regime r) {
  switch (r) {
    case Regime::B2Bounded: return "b2-bounded";
    case Regime::B2: return "b2";
    case Regime::B1Bounded: return "b1-bounded";
    case Regime::B1: return "b1";
  }
  return "?";
}

std::optional<Regime> parse_regime(std::string_view name) {
  for (Regime r : kAllRegimes) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

std::string Verdict::render() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << "CHECK " << c.name << (c.passed ? " PASS" : " FAIL");
    if (c.witness) os << " witness=" << *c.witness;
    os << "\n";
  }
  os << "REGIME " << to_string(regime) << (passed ? " PASS" : " FAIL") << "\n";
  return os.str();
}

XSet empty_slice_set(const TargetSet& t) { return x_projection(t).complement(); }

MultiplicitySets multiplicity_sets(const TargetSet& t, unsigned n_max) {
  const auto bs = branches(t);
  MultiplicitySets m;
  m.d = spread_set(bs, Rel::Greater, Rational(0));
  for (unsigned n = 1; n <= n_max; ++n) {
    m.d_n.push_back(spread_set(bs, Rel::GreaterEq, Rational(1, n)));
  }
  m.residual = !m.d.minus(m.d_n.back()).empty();
  return m;
}

XSet extended_multiplicity_set(const TargetSet& t) {
  XSet out = multiplicity_sets(t, 1).d;
  for (const auto& pe : pole_ends(t)) {
    if (extended_slice(t, pe.x).multiple()) out = out.unite(XSet::point(Real(pe.x)));
  }
  return out;
}

MeagerResult is_meager(const XSet& s) {
  if (auto w = s.first_interval()) return {false, w};
  return {true, std::nullopt};
}

Verdict check_regime(const TargetSet& t, Regime r) {
  Verdict v;
  v.regime = r;
  switch (r) {
    case Regime::B2Bounded:
      v.checks = {bounded_check(t), structural_closed(), nonempty_slices_check(t)};
      break;
    case Regime::B2:
      v.checks = {structural_closed(), countable_check("countable_C", empty_slice_set(t))};
      break;
    case Regime::B1Bounded:
      v.checks = {bounded_check(t), structural_closed(), nonempty_slices_check(t),
                  countable_check("meager_D", multiplicity_sets(t, 1).d)};
      break;
    case Regime::B1:
      v.checks = {structural_closed(), countable_check("countable_C", empty_slice_set(t)),
                  countable_check("meager_D_ext", extended_multiplicity_set(t))};
      break;
  }
  v.passed = true;
  for (const auto& c : v.checks) v.passed = v.passed && c.passed;
  return v;
}

}  // namespace baire
