#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "baire/set_model.hpp"

namespace baire {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Line grammar ('#' starts a comment; numbers are decimals or p/q):
//   point <x> <y>
//   box <x0> <x1> <y0> <y1>
//   pline <x0>:<y0> <x1>:<y1> [...]
//   hyper <pole> <x0> <x1> <coef>
TargetSet parse_target(std::istream& in);
TargetSet parse_target_text(std::string_view text);
TargetSet parse_target_file(const std::string& path);

// Inverse of parse_target, exact.
std::string format_target(const TargetSet& t);

}  // namespace baire
