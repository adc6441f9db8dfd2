#pragma once

#include <optional>
#include <string>
#include <vector>

#include "baire/real.hpp"

namespace baire {

/// Interval over the unit line with independent endpoint closure. A point is
/// the interval [p,p].
struct XInterval {
  Real lo;
  Real hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static XInterval closed(const Real& lo, const Real& hi) { return {lo, hi, true, true}; }
  static XInterval point(const Real& p) { return {p, p, true, true}; }

  bool empty() const;
  bool is_point() const { return lo == hi && lo_closed && hi_closed; }
  bool nondegenerate() const { return lo < hi; }
  bool contains(const Real& x) const;
  XInterval intersect(const XInterval& other) const;
  std::string str() const;

  friend bool operator==(const XInterval&, const XInterval&) = default;
};

/// Finite union of intervals inside [0,1], stored as sorted maximal components.
class XSet {
 public:
  XSet() = default;

  static XSet unit();
  static XSet point(const Real& p);
  static XSet closed(const Real& lo, const Real& hi);
  static XSet interval(const XInterval& part);
  // Normalizing constructor: clips to [0,1], drops empty parts, merges
  // overlapping or touching parts.
  static XSet from_parts(std::vector<XInterval> parts);

  const std::vector<XInterval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool contains(const Real& x) const;
  bool subset_of(const XSet& other) const;

  XSet unite(const XSet& other) const;
  XSet intersect(const XSet& other) const;
  XSet minus(const XSet& other) const { return intersect(other.complement()); }
  // Complement relative to [0,1].
  XSet complement() const;

  // Distance from x to the closure of the set; nullopt for the empty set.
  std::optional<Real> distance(const Real& x) const;

  // First component with positive length.
  std::optional<XInterval> first_interval() const;
  bool is_finite_point_set() const { return !first_interval().has_value(); }
  std::vector<Real> points() const;

  std::string str() const;

  friend bool operator==(const XSet&, const XSet&) = default;

 private:
  std::vector<XInterval> parts_;
};

}  // namespace baire
