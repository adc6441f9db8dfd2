#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "baire/synthesis.hpp"

namespace baire {

// f on {0, h, 2h, ..., 1}, every A-point and every C-point; one sample per x,
// sorted by x.
std::vector<RPoint> sample_graph(const SynthFunction& f, const Rational& h, unsigned depth);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Centers of the eps-cells holding samples at min_count or more distinct x.
struct AccumulationEstimate {
  std::vector<Point2> candidates;
  double eps = 0.0;
  unsigned min_count = 3;
  unsigned depth = 0;
};

AccumulationEstimate accumulation_estimate(const std::vector<RPoint>& samples, double eps, unsigned min_count = 3,
                                           unsigned depth = 0);

struct HausdorffResult {
  double forward = 0.0;   // farthest capped candidate from T
  double backward = 0.0;  // farthest probe of capped T from the candidates; +inf without candidates
};

HausdorffResult hausdorff_to_target(const AccumulationEstimate& est, const TargetSet& t, double y_cap);

// Largest distance from a probe to its nearest candidate; +inf when there are
// no candidates.
double farthest_nearest(const std::vector<Point2>& probes, const std::vector<Point2>& candidates, double cell);

struct Remark31Result {
  std::size_t count_far = 0;
  std::size_t bound = 0;
  bool passed = false;
};

// Samples farther than eps from T are at most sum_{n < ceil(1/eps)} #H_n + #C.
Remark31Result remark31_check(const std::vector<RPoint>& samples, const SynthFunction& f, const Rational& eps);

struct ClosurePoint {
  Rational x;
  bool f_plus = false;  // f takes large positive values on C-points near x
  bool f_minus = false;
  bool t_plus = false;  // +inf / -inf lie in the closure of T over x
  bool t_minus = false;
  bool passed() const { return (!f_plus || t_plus) && (!f_minus || t_minus); }
};

struct ClosureReport {
  bool applicable = false;
  std::vector<ClosurePoint> points;

  bool passed() const;
  std::string verdict() const;  // PASS, FAIL or N/A
};

// Accumulation points of C are read off runs of at least three strictly
// shrinking gaps in the sorted C-points; the run's far end, or the next
// C-point past it, is the accumulation point.
ClosureReport closure_direction_check(const SynthFunction& f);

struct VerifyParams {
  Rational h{1, 1024};
  double eps = 2.0 / 1024;
  unsigned min_count = 3;
  double y_cap = 5.0;
};

struct VerifyReport {
  HausdorffResult hausdorff;
  std::vector<Remark31Result> remark31;  // at eps = 1, 1/2, 1/4, 1/8
  ClosureReport closure;
  double tolerance = 0.0;                // 2 eps + 1/N
  AccumulationEstimate estimate;

  bool remark31_passed() const;
  bool passed() const;
  std::string render(int precision = 12) const;
};

VerifyReport verify(const SynthFunction& f, const VerifyParams& params);

}  // namespace baire
