#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "baire/set_model.hpp"

namespace baire {

class UnknownDemo : public std::invalid_argument {
 public:
  explicit UnknownDemo(const std::string& name) : std::invalid_argument("unknown demo '" + name + "'") {}
};

const std::vector<std::string>& demo_names();

// constant, square, hyperbola, sect6. Only sect6 depends on the depth.
TargetSet demo_set(const std::string& name, unsigned depth);

// The tent-pole set y = -1/d(x, C) for C = {0} U {1/n : n <= depth}.
TargetSet sect6_set(unsigned depth);

// c_1 = 0, c_n = 1/(n-1).
std::vector<Rational> sect6_c_order(unsigned depth);

// C enumeration a demo prescribes; nullopt means ascending order.
std::optional<std::vector<Rational>> demo_c_order(const std::string& name, unsigned depth);

// Truncation notice for depth-parameterized demos.
std::optional<std::string> demo_notice(const std::string& name, unsigned depth);

}  // namespace baire
