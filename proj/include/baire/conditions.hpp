#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "baire/set_model.hpp"
#include "baire/xset.hpp"

namespace baire {

enum class Regime { B2Bounded, B2, B1Bounded, B1 };

std::string to_string(Regime r);  // "b2-bounded", "b2", "b1-bounded", "b1"
std::optional<Regime> parse_regime(std::string_view name);
inline constexpr Regime kAllRegimes[] = {Regime::B2Bounded, Regime::B2, Regime::B1Bounded, Regime::B1};

inline bool is_bounded(Regime r) { return r == Regime::B2Bounded || r == Regime::B1Bounded; }
inline bool is_baire1(Regime r) { return r == Regime::B1Bounded || r == Regime::B1; }

struct Check {
  std::string name;
  bool passed = false;
  std::optional<std::string> witness;
};

struct Verdict {
  Regime regime = Regime::B2Bounded;
  bool passed = false;
  std::vector<Check> checks;

  // "CHECK <name> PASS|FAIL [witness=...]" per check, then "REGIME <r> PASS|FAIL".
  std::string render() const;
};

// C: the points of [0,1] over which T has an empty slice.
XSet empty_slice_set(const TargetSet& t);

struct MultiplicitySets {
  XSet d;
  std::vector<XSet> d_n;  // d_n[k] = {x : diam T(x) >= 1/(k+1)}
  // D still has points of positive diameter below 1/n_max.
  bool residual = false;
};

MultiplicitySets multiplicity_sets(const TargetSet& t, unsigned n_max = 32);

// {x : the closure of T in [0,1] x [-inf,+inf] has more than one point over x}.
XSet extended_multiplicity_set(const TargetSet& t);

struct MeagerResult {
  bool meager = true;
  std::optional<XInterval> witness;
};

MeagerResult is_meager(const XSet& s);

Verdict check_regime(const TargetSet& t, Regime r);

}  // namespace baire
