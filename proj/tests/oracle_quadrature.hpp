// Test-only brute-force integration: adaptive Simpson in one and two
// dimensions.  Deliberately independent of the library quadrature stack so
// it can serve as an oracle for the closed forms.
#pragma once

#include <cmath>
#include <functional>

namespace oracle {

namespace detail {

inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double both = left + right;
  if (depth <= 0 || std::fabs(both - whole) <= 15.0 * tol)
    return both + (both - whole) / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson of f on [a, b] with absolute tolerance tol.
inline double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                        int depth = 52) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

/// Iterated 2-D adaptive Simpson on [ax,bx] x [ay,by].
inline double integrate2d(const std::function<double(double, double)>& f, double ax, double bx,
                          double ay, double by, double tol) {
  return integrate(
      [&](double x) {
        return integrate([&](double y) { return f(x, y); }, ay, by, tol / (bx - ax) * 0.1);
      },
      ax, bx, tol);
}

}  // namespace oracle
