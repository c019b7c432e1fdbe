#pragma once

#include <cstdio>
#include <string>

namespace overlapkit {

/// printf %g rendering, for compact labels.
inline std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

/// printf %.17g rendering: 17 significant digits round-trip any double.
inline std::string fmt_17g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace overlapkit
