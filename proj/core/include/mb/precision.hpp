#pragma once

#include <cstdlib>
#include <cstring>

namespace mb {

enum class Precision { double_width, extended };

/// Accumulation width for compensated sums, selected once per process from
/// the MB_PRECISION environment variable ("double" or "extended"; default
/// extended).
inline Precision accumulation_precision() {
  static const Precision p = [] {
    const char* env = std::getenv("MB_PRECISION");
    if (env != nullptr && std::strcmp(env, "double") == 0) return Precision::double_width;
    return Precision::extended;
  }();
  return p;
}

/// Kahan-compensated sum of f(i) for i in [0, n), in the selected width.
template <typename F>
double compensated_sum(std::size_t n, F&& term) {
  if (accumulation_precision() == Precision::extended) {
    long double s = 0.0L, c = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      long double v = static_cast<long double>(term(i));
      long double y = v - c;
      long double t = s + y;
      c = (t - s) - y;
      s = t;
    }
    return static_cast<double>(s);
  }
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = term(i);
    double y = v - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

}  // namespace mb
