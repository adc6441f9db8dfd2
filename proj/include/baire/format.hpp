#pragma once

#include <string>

namespace baire {

// printf("%.*g").
std::string format_double(double v, int precision);

}  // namespace baire
