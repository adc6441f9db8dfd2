#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "baire/conditions.hpp"
#include "baire/set_model.hpp"
#include "baire/xset.hpp"

namespace baire {

class EmptySlice : public std::domain_error {
 public:
  explicit EmptySlice(const Rational& x) : std::domain_error("empty slice at x=" + to_string(x)) {}
};

class RegimeUnsatisfied : public std::runtime_error {
 public:
  explicit RegimeUnsatisfied(Verdict v)
      : std::runtime_error("regime " + to_string(v.regime) + " not satisfied"), verdict(std::move(v)) {}
  Verdict verdict;
};

/// Finite nets H_1..H_N of T_n = T cut to |y| <= n. The x-coordinates of all
/// net points, over all levels, are pairwise distinct.
struct CountableApprox {
  unsigned depth = 0;
  std::vector<std::vector<RPoint>> levels;  // levels[n-1] = H_n

  // a_1, a_2, ...: level by level, in construction order.
  std::vector<RPoint> enumeration() const;
  std::size_t size() const;
};

// Net of spacing 1/(2n) per level, each point nudged by at most 1/(4n) so its
// x is fresh and outside `avoid`. Throws std::runtime_error if no admissible
// spot exists (impossible when `avoid` contains no interval).
CountableApprox lemma31_net(const TargetSet& t, unsigned depth, const XSet& avoid);

// max T(x). Throws EmptySlice.
Rational f0_bounded(const TargetSet& t, const Rational& x);

/// U_n = {x : T(x) meets [-n,n]}, V_n = U_n \ U_{n-1}, and W: closed parts
/// of the V_n ordered by level, then left endpoint.
struct LevelSets {
  std::vector<XSet> u;  // u[n-1] = U_n
  std::vector<XSet> v;
  std::vector<XInterval> w;
  std::vector<unsigned> w_level;
};

LevelSets u_sets(const TargetSet& t, unsigned depth);

// n_x = min{n : x in U_n}. Throws EmptySlice.
unsigned level_of(const TargetSet& t, const Rational& x, const LevelSets& levels);

// Largest element of T(x) with |y| <= n_x. Throws EmptySlice.
Rational f0_unbounded(const TargetSet& t, const Rational& x, const LevelSets& levels);

struct CValue {
  Rational x;
  unsigned index = 0;  // n in c_n
  Rational value;
  // Signed variant only: no divergence at x, so the sign defaulted to +.
  bool sign_defaulted = false;
};

std::vector<CValue> f_on_C(const std::vector<Rational>& c_order, const TargetSet& t, bool signed_variant);

struct SynthFunction {
  Regime regime = Regime::B2Bounded;
  TargetSet target;
  unsigned depth = 0;
  bool signed_variant = false;
  CountableApprox approx;
  XSet c_set;
  std::vector<CValue> c_enum;
  LevelSets levels;  // unbounded regimes only

  std::vector<Branch> branch_cache;
  std::map<Rational, Rational> a_value;
  std::map<Rational, std::size_t> a_index;  // 1-based position in the enumeration
  std::map<Rational, std::size_t> c_index;  // into c_enum
};

// Throws RegimeUnsatisfied. `c_order` overrides the ascending enumeration of C
// and must list exactly the points of C.
SynthFunction synthesize(const TargetSet& t, Regime r, unsigned depth, bool signed_variant,
                         const std::optional<std::vector<Rational>>& c_order = std::nullopt);

// A-value, else C-value, else backbone.
Rational evaluate(const SynthFunction& f, const Rational& x);

// f_0: C-values on C, the max-slice backbone elsewhere. Ignores A.
Rational evaluate_backbone(const SynthFunction& f, const Rational& x);

bool in_A(const SynthFunction& f, const Rational& x);
bool in_C(const SynthFunction& f, const Rational& x);

}  // namespace baire
