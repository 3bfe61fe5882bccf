#pragma once

#include <string>

namespace gmssc {

// Shortest-faithful decimal with the given significant digits (printf %g).
// CSV output uses 12 digits; LP dumps use 17 so values round-trip exactly.
std::string format_double(double value, int significant_digits);

inline std::string csv_double(double value) { return format_double(value, 12); }

}  // namespace gmssc
