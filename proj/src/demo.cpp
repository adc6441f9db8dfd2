#include "baire/demo.hpp"

#include <algorithm>

namespace baire {

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{"constant", "square", "hyperbola", "sect6"};
  return names;
}

TargetSet sect6_set(unsigned depth) {
  std::vector<Rational> c = sect6_c_order(depth);
  std::sort(c.begin(), c.end());
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const Rational& a = c[i];
    const Rational& b = c[i + 1];
    const Rational m = (a + b) / 2;
    pieces.push_back(Hyper{a, a, m, Rational(-1)});
    pieces.push_back(Hyper{b, m, b, Rational(1)});
  }
  return TargetSet(std::move(pieces));
}

std::vector<Rational> sect6_c_order(unsigned depth) {
  std::vector<Rational> c{Rational(0)};
  for (unsigned n = 1; n <= depth; ++n) c.push_back(Rational(1, n));
  return c;
}

TargetSet demo_set(const std::string& name, unsigned depth) {
  if (name == "constant") return TargetSet({PLine{{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}}});
  if (name == "square") return TargetSet({Box{Rational(0), Rational(1), Rational(0), Rational(1)}});
  if (name == "hyperbola") return TargetSet({Hyper{Rational(0), Rational(0), Rational(1), Rational(1)}});
  if (name == "sect6") return sect6_set(depth);
  throw UnknownDemo(name);
}

std::optional<std::vector<Rational>> demo_c_order(const std::string& name, unsigned depth) {
  if (name == "sect6") return sect6_c_order(depth);
  return std::nullopt;
}

std::optional<std::string> demo_notice(const std::string& name, unsigned depth) {
  if (name != "sect6") return std::nullopt;
  return "sect6 truncated at depth " + std::to_string(depth) + ": C = {0} U {1/n : n <= " +
         std::to_string(depth) + "}; poles 1/n for n > " + std::to_string(depth) + " are omitted";
}

}  // namespace baire
