#include "baire/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "baire/format.hpp"

namespace baire {

namespace {

using CellKey = std::pair<long long, long long>;

CellKey cell_of(double x, double y, double cell) {
  return {static_cast<long long>(std::floor(x / cell)), static_cast<long long>(std::floor(y / cell))};
}

struct CellHash {
  std::size_t operator()(const CellKey& k) const {
    return std::hash<long long>()(k.first) * 1000003u ^ std::hash<long long>()(k.second);
  }
};

// Signs of f over the half of a run nearest its accumulation point.
void run_directions(const SynthFunction& f, const std::vector<Rational>& run, ClosurePoint& p) {
  for (std::size_t i = run.size() / 2; i < run.size(); ++i) {
    const int s = sgn(evaluate(f, run[i]));
    if (s > 0) p.f_plus = true;
    if (s < 0) p.f_minus = true;
  }
}

// Runs of >= 3 strictly decreasing consecutive gaps along `pts` (in walk order).
void scan_runs(const SynthFunction& f, const std::vector<Rational>& pts, std::map<Rational, ClosurePoint>& out) {
  if (pts.size() < 4) return;
  std::vector<Rational> gaps;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) gaps.push_back(abs(Rational(pts[i + 1] - pts[i])));
  std::size_t s = 0;
  while (s < gaps.size()) {
    std::size_t e = s;
    while (e + 1 < gaps.size() && gaps[e + 1] < gaps[e]) ++e;
    if (e - s + 1 >= 3) {
      // Run points pts[s..e+1]; the limit is the next point if there is one.
      std::vector<Rational> run(pts.begin() + static_cast<long>(s), pts.begin() + static_cast<long>(e + 2));
      const bool has_next = e + 2 < pts.size();
      const Rational acc = has_next ? pts[e + 2] : pts[e + 1];
      if (!has_next) run.pop_back();
      run_directions(f, run, out.try_emplace(acc, ClosurePoint{acc}).first->second);
    }
    s = e + 1;
  }
}

}  // namespace

std::vector<RPoint> sample_graph(const SynthFunction& f, const Rational& h, unsigned depth) {
  std::map<Rational, bool> xs;
  for (Rational x(0); x <= 1; x += h) xs.emplace(x, true);
  xs.emplace(Rational(1), true);
  for (unsigned n = 1; n <= depth && n <= f.approx.levels.size(); ++n) {
    for (const auto& p : f.approx.levels[n - 1]) xs.emplace(p.x, true);
  }
  for (const auto& c : f.c_enum) xs.emplace(c.x, true);
  std::vector<RPoint> out;
  out.reserve(xs.size());
  for (const auto& [x, _] : xs) out.push_back({x, evaluate(f, x)});
  return out;
}

AccumulationEstimate accumulation_estimate(const std::vector<RPoint>& samples, double eps, unsigned min_count,
                                           unsigned depth) {
  std::map<CellKey, std::set<Rational>> cells;
  for (const auto& p : samples) cells[cell_of(to_double(p.x), to_double(p.y), eps)].insert(p.x);
  AccumulationEstimate est;
  est.eps = eps;
  est.min_count = min_count;
  est.depth = depth;
  for (const auto& [key, xs] : cells) {
    if (xs.size() < min_count) continue;
    est.candidates.push_back({(static_cast<double>(key.first) + 0.5) * eps, (static_cast<double>(key.second) + 0.5) * eps});
  }
  return est;
}

double farthest_nearest(const std::vector<Point2>& probes, const std::vector<Point2>& candidates, double cell) {
  if (probes.empty()) return 0.0;
  if (candidates.empty()) return std::numeric_limits<double>::infinity();
  std::unordered_map<CellKey, std::vector<std::size_t>, CellHash> buckets;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    buckets[cell_of(candidates[i].x, candidates[i].y, cell)].push_back(i);
  }
  constexpr long long kMaxRing = 64;
  double worst = 0.0;
  for (const auto& p : probes) {
    const CellKey home = cell_of(p.x, p.y, cell);
    double best = std::numeric_limits<double>::infinity();
    long long ring = 0;
    for (; ring <= kMaxRing; ++ring) {
      // A candidate outside this ring is at least ring * cell away.
      if (static_cast<double>(ring - 1) * cell > best) break;
      for (long long dx = -ring; dx <= ring; ++dx) {
        for (long long dy = -ring; dy <= ring; ++dy) {
          if (std::max(std::llabs(dx), std::llabs(dy)) != ring) continue;
          auto it = buckets.find({home.first + dx, home.second + dy});
          if (it == buckets.end()) continue;
          for (std::size_t i : it->second) {
            best = std::min(best, std::hypot(candidates[i].x - p.x, candidates[i].y - p.y));
          }
        }
      }
    }
    if (ring > kMaxRing && static_cast<double>(kMaxRing) * cell <= best) {
      for (const auto& c : candidates) best = std::min(best, std::hypot(c.x - p.x, c.y - p.y));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

HausdorffResult hausdorff_to_target(const AccumulationEstimate& est, const TargetSet& t, double y_cap) {
  HausdorffResult r;
  for (const auto& c : est.candidates) {
    if (std::fabs(c.y) > y_cap) continue;
    r.forward = std::max(r.forward, distance_point_to_set(c.x, c.y, t));
  }
  std::vector<Point2> probes;
  for (const auto& p : cover_points(t, from_double(y_cap), from_double(est.eps))) {
    probes.push_back({to_double(p.x), to_double(p.y)});
  }
  r.backward = farthest_nearest(probes, est.candidates, est.eps);
  return r;
}

Remark31Result remark31_check(const std::vector<RPoint>& samples, const SynthFunction& f, const Rational& eps) {
  Remark31Result r;
  const double e = to_double(eps);
  for (const auto& p : samples) {
    if (distance_point_to_set(p.x, p.y, f.target) > e) ++r.count_far;
  }
  const long levels = ceil_to_long(Rational(1) / eps);
  for (long n = 1; n < levels && n <= static_cast<long>(f.approx.levels.size()); ++n) {
    r.bound += f.approx.levels[static_cast<std::size_t>(n - 1)].size();
  }
  r.bound += f.c_enum.size();
  r.passed = r.count_far <= r.bound;
  return r;
}

bool ClosureReport::passed() const {
  return std::all_of(points.begin(), points.end(), [](const ClosurePoint& p) { return p.passed(); });
}

std::string ClosureReport::verdict() const {
  if (!applicable) return "N/A";
  return passed() ? "PASS" : "FAIL";
}

ClosureReport closure_direction_check(const SynthFunction& f) {
  ClosureReport report;
  report.applicable = !is_bounded(f.regime);
  if (!report.applicable) return report;
  std::vector<Rational> c;
  for (const auto& v : f.c_enum) c.push_back(v.x);
  std::sort(c.begin(), c.end());
  std::map<Rational, ClosurePoint> found;
  scan_runs(f, c, found);
  std::reverse(c.begin(), c.end());
  scan_runs(f, c, found);
  for (auto& [x, p] : found) {
    const ExtendedSlice e = extended_slice(f.target, x);
    p.t_plus = e.plus_inf;
    p.t_minus = e.minus_inf;
    report.points.push_back(p);
  }
  return report;
}

bool VerifyReport::remark31_passed() const {
  return std::all_of(remark31.begin(), remark31.end(), [](const Remark31Result& r) { return r.passed; });
}

bool VerifyReport::passed() const {
  return hausdorff.forward <= tolerance && hausdorff.backward <= tolerance && remark31_passed() &&
         closure.verdict() != "FAIL";
}

std::string VerifyReport::render(int precision) const {
  std::ostringstream os;
  os << "VERIFY d_forward=" << format_double(hausdorff.forward, precision)
     << " d_backward=" << format_double(hausdorff.backward, precision)
     << " remark31=" << (remark31_passed() ? "PASS" : "FAIL") << " closure=" << closure.verdict();
  return os.str();
}

VerifyReport verify(const SynthFunction& f, const VerifyParams& params) {
  VerifyReport r;
  const auto samples = sample_graph(f, params.h, f.depth);
  r.estimate = accumulation_estimate(samples, params.eps, params.min_count, f.depth);
  r.hausdorff = hausdorff_to_target(r.estimate, f.target, params.y_cap);
  for (unsigned k = 0; k < 4; ++k) r.remark31.push_back(remark31_check(samples, f, dyadic(k)));
  r.closure = closure_direction_check(f);
  r.tolerance = 2 * params.eps + 1.0 / f.depth;
  return r;
}

}  // namespace baire
