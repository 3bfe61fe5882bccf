#include "gmssc/format.hpp"

#include <cstdio>

namespace gmssc {

std::string format_double(double value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
  return buf;
}

}  // namespace gmssc
