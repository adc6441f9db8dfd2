#include "baire/format.hpp"

#include <cmath>
#include <cstdio>

namespace baire {

std::string format_double(double v, int precision) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

}  // namespace baire
