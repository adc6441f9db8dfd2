#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "baire/rational.hpp"
#include "baire/xset.hpp"

namespace baire {

struct RPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RPoint&, const RPoint&) = default;
};

struct Point {
  Rational x;
  Rational y;
};

/// Closed rectangle [x0,x1] x [y0,y1]; degenerate widths/heights allowed.
struct Box {
  Rational x0, x1;
  Rational y0, y1;
};

/// Graph of the piecewise-linear interpolant through the vertices.
struct PLine {
  std::vector<RPoint> vertices;
};

/// Graph of y = coef / (x - pole) on [x0,x1], minus the pole when it is an
/// endpoint. The pole never lies strictly inside (x0,x1).
struct Hyper {
  Rational pole;
  Rational x0, x1;
  Rational coef;

  bool pole_at_left() const { return pole == x0; }
  bool pole_at_right() const { return pole == x1; }
  bool unbounded() const { return pole_at_left() || pole_at_right(); }
};

using Piece = std::variant<Point, Box, PLine, Hyper>;

class InvalidPiece : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Error message when the piece violates its invariants.
std::optional<std::string> validate(const Piece& piece);

/// Finite union of closed pieces; the union is a closed subset of [0,1] x R.
class TargetSet {
 public:
  TargetSet() = default;
  // Throws InvalidPiece.
  explicit TargetSet(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool bounded() const;
  TargetSet unite(const TargetSet& other) const;

 private:
  std::vector<Piece> pieces_;
};

/// y = a*x + b (Linear) or y = a / (x - b) (Hyperbolic).
struct Curve {
  enum class Kind { Linear, Hyperbolic };
  Kind kind = Kind::Linear;
  Rational a;
  Rational b;

  static Curve constant(const Rational& c) { return {Kind::Linear, Rational(0), c}; }
  static Curve linear(const Rational& slope, const Rational& intercept) {
    return {Kind::Linear, slope, intercept};
  }
  static Curve through(const RPoint& p, const RPoint& q);
  static Curve hyperbolic(const Rational& coef, const Rational& pole) {
    return {Kind::Hyperbolic, coef, pole};
  }

  Rational operator()(const Rational& x) const;
};

/// A piece's slice over part of its x-range: at each x in `domain`, the
/// piece contributes the closed y-interval [lower(x), upper(x)].
struct Branch {
  XInterval domain;
  Curve lower;
  Curve upper;
  bool graph = false;
  std::size_t piece = 0;

  bool unbounded_left() const;
  bool unbounded_right() const;
};

std::vector<Branch> branches(const TargetSet& t);

enum class Rel { Less, LessEq, Greater, GreaterEq };

// Exact solution set {x in dom : g(x) - h(x) rel t}. Curves must be finite on
// dom (poles only at excluded endpoints or outside).
XSet solve(const Curve& g, const Curve& h, Rel rel, const Rational& t, const XInterval& dom);

inline XSet solve(const Curve& g, Rel rel, const Rational& t, const XInterval& dom) {
  return solve(g, Curve::constant(Rational(0)), rel, t, dom);
}

struct YInterval {
  Rational lo;
  Rational hi;
  friend bool operator==(const YInterval&, const YInterval&) = default;
};

/// Sorted, pairwise disjoint closed intervals on a vertical line.
class SliceSet {
 public:
  SliceSet() = default;
  static SliceSet from_intervals(std::vector<YInterval> parts);

  const std::vector<YInterval>& intervals() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rational& y) const;
  bool singleton() const { return parts_.size() == 1 && parts_[0].lo == parts_[0].hi; }
  bool multiple() const { return !empty() && !singleton(); }
  const Rational& max() const;  // precondition: nonempty
  const Rational& min() const;
  Rational diameter() const;
  Rational min_abs() const;  // precondition: nonempty
  // max of the slice restricted to [-bound, bound]; nullopt when that part is empty.
  std::optional<Rational> max_within(const Rational& bound) const;
  SliceSet unite(const SliceSet& other) const;
  std::string str() const;

  friend bool operator==(const SliceSet&, const SliceSet&) = default;

 private:
  std::vector<YInterval> parts_;
};

struct ExtendedSlice {
  SliceSet finite;
  bool plus_inf = false;
  bool minus_inf = false;

  // True iff the extended slice has more than one element.
  bool multiple() const;
  std::string str() const;
};

SliceSet slice(const TargetSet& t, const Rational& x);
// Same, over a precomputed branch list.
SliceSet slice(const std::vector<Branch>& bs, const Rational& x);
ExtendedSlice extended_slice(const TargetSet& t, const Rational& x);
XSet x_projection(const TargetSet& t);

// Pole endpoints of unbounded hyperbola pieces, with the divergence direction
// seen from inside the piece's domain (+1 or -1).
struct PoleEnd {
  Rational x;
  int direction;
};
std::vector<PoleEnd> pole_ends(const TargetSet& t);

bool contains(const TargetSet& t, const Rational& x, const Rational& y);

double distance_point_to_set(double px, double py, const TargetSet& t);
// Exact zero for points on the set; floating distance otherwise.
double distance_point_to_set(const Rational& px, const Rational& py, const TargetSet& t);
double distance_point_to_piece(double px, double py, const Piece& piece);

/// Points on the piece within |y| <= y_cap such that every point of that part
/// of the piece lies within `spacing` of one of them. Box grids and curve
/// subdivisions are aligned to dyadic coordinates, so refining the spacing
/// keeps every earlier point.
std::vector<RPoint> cover_points(const Piece& piece, const Rational& y_cap, const Rational& spacing);
std::vector<RPoint> cover_points(const TargetSet& t, const Rational& y_cap, const Rational& spacing);

}  // namespace baire
