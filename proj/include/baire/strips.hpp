#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "baire/real.hpp"
#include "baire/synthesis.hpp"

namespace baire {

class ScheduleInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CenterKind { A, C, Backbone };

/// A ball center (x, g(x)), where g is the function the strips certify: f in
/// Baire-1 regimes, the backbone f_0 in Baire-2 regimes (there A-points are
/// ordinary backbone centers).
struct Center {
  Rational x;
  Rational y;
  CenterKind kind = CenterKind::Backbone;
  std::size_t index = 0;  // k of a_k or c_k; 0 for backbone centers
};

// A and C points first, then grid points not already present; sorted by x.
std::vector<Center> strip_centers(const SynthFunction& f, const std::vector<Rational>& grid);

// {0, 1/m, ..., 1}.
std::vector<Rational> uniform_grid(unsigned m);

struct EpsilonSchedule {
  unsigned depth = 0;
  std::vector<Center> centers;
  std::vector<std::vector<Real>> eps;  // eps[n-1][i] for centers[i]

  const Real& at(std::size_t center, unsigned n) const { return eps[n - 1][center]; }
};

// Throws ScheduleInfeasible when a constraint forces a radius <= 0.
EpsilonSchedule epsilon_schedule(const SynthFunction& f, std::vector<Center> centers, unsigned depth);

struct StripColumn {
  Rational x;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t chords = 0;  // balls meeting the column
  bool inherited = false;  // no ball met the column
  double y_min = 0.0;      // range of the centers whose balls meet the column
  double y_max = 0.0;
};

struct StripLevel {
  unsigned n = 0;
  std::vector<StripColumn> columns;
};

struct StripFamily {
  std::vector<StripLevel> levels;
};

StripLevel build_strip(const EpsilonSchedule& sched, const std::vector<Rational>& columns, unsigned n);

// Levels 1..depth with one column per center.
StripFamily build_strips(const EpsilonSchedule& sched);

struct StripLevelReport {
  unsigned n = 0;
  bool nesting = true;
  bool coverage = true;
  bool shrink = true;
  bool continuity = true;
  double max_width_a = -1.0;  // negative: no eligible column
  double max_width_c = -1.0;

  std::string render(int precision = 12) const;
};

struct StripReport {
  std::vector<StripLevelReport> levels;
  bool passed() const;
  std::string render(int precision = 12) const;
};

inline constexpr double kWidthTolerance = 1e-9;

// Checks nesting, coverage of the certified value, and collapse of A/C columns:
// column a_k (Baire-1 regimes) or c_k must meet exactly one ball of width at
// most 2/n at every level n >= k.
StripReport verify_strips(const StripFamily& family, const EpsilonSchedule& sched, const SynthFunction& f);

// "x,lo,hi" rows.
std::string strip_csv(const StripLevel& level, int precision = 12);

}  // namespace baire
