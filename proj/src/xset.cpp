#include "baire/xset.hpp"

#include <algorithm>
#include <sstream>

namespace baire {

bool XInterval::empty() const {
  if (hi < lo) return true;
  if (lo == hi) return !(lo_closed && hi_closed);
  return false;
}

bool XInterval::contains(const Real& x) const {
  if (empty()) return false;
  const auto l = lo <=> x;
  const auto h = x <=> hi;
  const bool above = l < 0 || (l == 0 && lo_closed);
  const bool below = h < 0 || (h == 0 && hi_closed);
  return above && below;
}

XInterval XInterval::intersect(const XInterval& other) const {
  XInterval r;
  if (lo < other.lo) {
    r.lo = other.lo;
    r.lo_closed = other.lo_closed;
  } else if (other.lo < lo) {
    r.lo = lo;
    r.lo_closed = lo_closed;
  } else {
    r.lo = lo;
    r.lo_closed = lo_closed && other.lo_closed;
  }
  if (hi < other.hi) {
    r.hi = hi;
    r.hi_closed = hi_closed;
  } else if (other.hi < hi) {
    r.hi = other.hi;
    r.hi_closed = other.hi_closed;
  } else {
    r.hi = hi;
    r.hi_closed = hi_closed && other.hi_closed;
  }
  return r;
}

std::string XInterval::str() const {
  if (is_point()) return "{" + lo.str() + "}";
  return std::string(lo_closed ? "[" : "(") + lo.str() + "," + hi.str() + (hi_closed ? "]" : ")");
}

XSet XSet::unit() { return closed(Real(0), Real(1)); }

XSet XSet::point(const Real& p) { return from_parts({XInterval::point(p)}); }

XSet XSet::closed(const Real& lo, const Real& hi) {
  return from_parts({XInterval::closed(lo, hi)});
}

XSet XSet::interval(const XInterval& part) { return from_parts({part}); }

XSet XSet::from_parts(std::vector<XInterval> parts) {
  const XInterval universe = XInterval::closed(Real(0), Real(1));
  std::vector<XInterval> clipped;
  clipped.reserve(parts.size());
  for (const auto& p : parts) {
    XInterval c = p.intersect(universe);
    if (!c.empty()) clipped.push_back(std::move(c));
  }
  std::sort(clipped.begin(), clipped.end(), [](const XInterval& a, const XInterval& b) {
    const auto c = a.lo <=> b.lo;
    if (c != 0) return c < 0;
    return a.lo_closed && !b.lo_closed;
  });

  XSet out;
  for (auto& p : clipped) {
    if (out.parts_.empty()) {
      out.parts_.push_back(std::move(p));
      continue;
    }
    XInterval& cur = out.parts_.back();
    const auto c = p.lo <=> cur.hi;
    const bool joins = c < 0 || (c == 0 && (cur.hi_closed || p.lo_closed));
    if (!joins) {
      out.parts_.push_back(std::move(p));
      continue;
    }
    if (p.lo == cur.lo) cur.lo_closed = cur.lo_closed || p.lo_closed;
    const auto h = p.hi <=> cur.hi;
    if (h > 0) {
      cur.hi = p.hi;
      cur.hi_closed = p.hi_closed;
    } else if (h == 0) {
      cur.hi_closed = cur.hi_closed || p.hi_closed;
    }
  }
  return out;
}

bool XSet::contains(const Real& x) const {
  // Components are sorted; find the last one starting at or before x.
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Real& v, const XInterval& p) { return v < p.lo; });
  if (it == parts_.begin()) return false;
  return std::prev(it)->contains(x);
}

bool XSet::subset_of(const XSet& other) const { return minus(other).empty(); }

XSet XSet::unite(const XSet& other) const {
  std::vector<XInterval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return from_parts(std::move(all));
}

XSet XSet::intersect(const XSet& other) const {
  std::vector<XInterval> out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    XInterval c = parts_[i].intersect(other.parts_[j]);
    if (!c.empty()) out.push_back(std::move(c));
    const auto h = parts_[i].hi <=> other.parts_[j].hi;
    if (h < 0 || (h == 0 && !parts_[i].hi_closed)) {
      ++i;
    } else {
      ++j;
    }
  }
  return from_parts(std::move(out));
}

XSet XSet::complement() const {
  std::vector<XInterval> out;
  Real cursor(0);
  bool cursor_closed = true;
  for (const auto& p : parts_) {
    XInterval gap{cursor, p.lo, cursor_closed, !p.lo_closed};
    if (!gap.empty()) out.push_back(std::move(gap));
    cursor = p.hi;
    cursor_closed = !p.hi_closed;
  }
  XInterval tail{cursor, Real(1), cursor_closed, true};
  if (!tail.empty()) out.push_back(std::move(tail));
  return from_parts(std::move(out));
}

std::optional<Real> XSet::distance(const Real& x) const {
  if (parts_.empty()) return std::nullopt;
  std::optional<Real> best;
  for (const auto& p : parts_) {
    Real d(0);
    if (x < p.lo) {
      d = p.lo - x;
    } else if (p.hi < x) {
      d = x - p.hi;
    }
    if (!best || d < *best) best = d;
    if (best->sign() == 0) break;
  }
  return best;
}

std::optional<XInterval> XSet::first_interval() const {
  for (const auto& p : parts_) {
    if (p.nondegenerate()) return p;
  }
  return std::nullopt;
}

std::vector<Real> XSet::points() const {
  std::vector<Real> out;
  for (const auto& p : parts_) {
    if (p.is_point()) out.push_back(p.lo);
  }
  return out;
}

std::string XSet::str() const {
  if (parts_.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << " U ";
    os << parts_[i].str();
  }
  return os.str();
}

}  // namespace baire
