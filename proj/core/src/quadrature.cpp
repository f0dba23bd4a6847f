#include "mb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mb/precision.hpp"
#include "mb/specfun.hpp"

namespace mb {

namespace {

// Symmetric tridiagonal QL with implicit shifts, tracking the first row of
// the eigenvector matrix (Martin-Wilkinson / IMTQLX).  d: diagonal, e:
// subdiagonal (size n, last entry scratch), z: seeded [1, 0, ..., 0].
void imtqlx(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  const double prec = std::numeric_limits<double>::epsilon();
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      int m = l;
      for (; m < n - 1; ++m)
        if (std::fabs(e[m]) <= prec * (std::fabs(d[m]) + std::fabs(d[m + 1]))) break;
      if (m == l) break;
      if (++iter > 60) throw std::runtime_error("imtqlx: eigenvalue iteration failed to converge");

      double p = d[l];
      double g = (d[l + 1] - p) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - p + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0;
      p = 0.0;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        double b = c * e[i];
        if (std::fabs(f) >= std::fabs(g)) {
          c = g / f;
          r = std::hypot(c, 1.0);
          e[i + 1] = f * r;
          s = 1.0 / r;
          c *= s;
        } else {
          s = f / g;
          r = std::hypot(s, 1.0);
          e[i + 1] = g * r;
          c = 1.0 / r;
          s *= c;
        }
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  // Sort ascending, permuting z along.
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
  std::vector<double> ds(d.size()), zs(z.size());
  for (int i = 0; i < n; ++i) {
    ds[i] = d[idx[i]];
    zs[i] = z[idx[i]];
  }
  d = std::move(ds);
  z = std::move(zs);
}

}  // namespace

double QuadratureRule::apply(const std::function<double(double)>& f) const {
  return compensated_sum(nodes.size(), [&](std::size_t i) { return weights[i] * f(nodes[i]); });
}

RecurrenceCoeffs laguerre_recurrence(double a, int n) {
  if (!(a > -1.0)) throw std::domain_error("laguerre_recurrence: requires a > -1");
  RecurrenceCoeffs rc;
  rc.alpha.resize(static_cast<std::size_t>(n));
  rc.beta.resize(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    rc.alpha[k] = 2.0 * k + a + 1.0;
    if (k >= 1) rc.beta[k] = k * (k + a);
  }
  rc.mu0 = std::exp(log_gamma(a + 1.0));
  return rc;
}

RecurrenceCoeffs jacobi01_recurrence(double a, double b, int n) {
  if (!(a > -1.0) || !(b > -1.0)) throw std::domain_error("jacobi01_recurrence: requires a, b > -1");
  // Monic Jacobi on (-1,1) with weight (1-t)^al (1+t)^be, al = b, be = a,
  // mapped to (0,1) by t = 2x - 1.
  const double al = b, be = a;
  RecurrenceCoeffs rc;
  rc.alpha.resize(static_cast<std::size_t>(n));
  rc.beta.resize(static_cast<std::size_t>(n), 0.0);
  const double s = al + be;
  for (int k = 0; k < n; ++k) {
    double A;
    if (k == 0) {
      A = (be - al) / (s + 2.0);
    } else {
      A = (be * be - al * al) / ((2.0 * k + s) * (2.0 * k + s + 2.0));
    }
    rc.alpha[k] = 0.5 * (1.0 + A);
    if (k == 1) {
      // (k + al + be) cancels against (2k + al + be - 1); written cancelled
      // so a + b near -1 stays finite.
      rc.beta[1] = 4.0 * (1.0 + al) * (1.0 + be) / ((2.0 + s) * (2.0 + s) * (3.0 + s)) / 4.0;
    } else if (k >= 2) {
      double B = 4.0 * k * (k + al) * (k + be) * (k + s) /
                 ((2.0 * k + s) * (2.0 * k + s) * (2.0 * k + s + 1.0) * (2.0 * k + s - 1.0));
      rc.beta[k] = B / 4.0;
    }
  }
  const std::vector<double> num = {a + 1.0, b + 1.0};
  const std::vector<double> den = {a + b + 2.0};
  rc.mu0 = gamma_ratio(num, den).to_real();
  return rc;
}

QuadratureRule gauss_from_recurrence(const RecurrenceCoeffs& rc, Support support) {
  const int n = static_cast<int>(rc.alpha.size());
  std::vector<double> d = rc.alpha;
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(rc.beta[k]);
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  z[0] = 1.0;
  imtqlx(d, e, z);
  QuadratureRule rule;
  rule.nodes = d;
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rule.weights[i] = rc.mu0 * z[i] * z[i];
  rule.target_support = support;
  rule.exactness_degree = 2 * n - 1;
  return rule;
}

QuadratureRule gauss_laguerre(double a, int n) {
  if (n < 1 || n > 4096) throw std::domain_error("gauss_laguerre: need 1 <= n <= 4096");
  return gauss_from_recurrence(laguerre_recurrence(a, n), Support::halfline);
}

QuadratureRule gauss_jacobi01(double a, double b, int n) {
  if (n < 1 || n > 4096) throw std::domain_error("gauss_jacobi01: need 1 <= n <= 4096");
  return gauss_from_recurrence(jacobi01_recurrence(a, b, n), Support::unit01);
}

QuadratureRule make_quadrature(const WeightSpec& w, int n) {
  if (n < 1 || n > 4096) throw std::domain_error("make_quadrature: need 1 <= n <= 4096");
  w.validate();
  switch (w.family) {
    case WeightFamily::laguerre:
      return gauss_laguerre(w.p1, n);
    case WeightFamily::jacobi:
      return gauss_jacobi01(w.p1, w.p2, n);
    case WeightFamily::jacobi_prime: {
      // x = t/(1-t):  w(x) dx = t^alpha (1-t)^{beta-alpha-2} dt.
      QuadratureRule t_rule = gauss_jacobi01(w.p1, w.p2 - w.p1 - 2.0, n);
      QuadratureRule rule;
      rule.nodes.resize(t_rule.nodes.size());
      for (std::size_t i = 0; i < t_rule.nodes.size(); ++i)
        rule.nodes[i] = t_rule.nodes[i] / (1.0 - t_rule.nodes[i]);
      rule.weights = t_rule.weights;
      rule.target_support = Support::halfline;
      // Exact for the rational class (x/(1+x))^m, m <= 2n-1.
      rule.exactness_degree = 2 * n - 1;
      return rule;
    }
    case WeightFamily::gen_gaussian:
    case WeightFamily::gen_sym_jacobi:
    case WeightFamily::gen_cauchy: {
      auto [even, odd] = parity_reduce(w, 1.0);
      (void)odd;
      QuadratureRule y_rule = make_quadrature(even, n);
      QuadratureRule rule;
      rule.nodes.reserve(2 * y_rule.nodes.size());
      rule.weights.reserve(2 * y_rule.nodes.size());
      for (std::size_t i = y_rule.nodes.size(); i-- > 0;) {
        rule.nodes.push_back(-std::sqrt(y_rule.nodes[i]));
        rule.weights.push_back(0.5 * y_rule.weights[i]);
      }
      for (std::size_t i = 0; i < y_rule.nodes.size(); ++i) {
        rule.nodes.push_back(std::sqrt(y_rule.nodes[i]));
        rule.weights.push_back(0.5 * y_rule.weights[i]);
      }
      rule.target_support =
          (w.family == WeightFamily::gen_sym_jacobi) ? Support::sym11 : Support::realline;
      // Odd powers vanish by symmetry, even powers x^{2m} are exact for m <= 2n-1.
      rule.exactness_degree = 4 * n - 1;
      return rule;
    }
  }
  throw std::logic_error("make_quadrature: unreachable");
}

double integrate_weighted(const WeightSpec& w, const std::function<double(double)>& f,
                          double rel_tol, int max_nodes) {
  double prev = 0.0;
  bool have_prev = false;
  for (int n = 64; n <= max_nodes; n *= 2) {
    double cur = make_quadrature(w, n).apply(f);
    if (have_prev) {
      double scale = std::max({std::fabs(cur), std::fabs(prev), 1e-300});
      if (std::fabs(cur - prev) <= rel_tol * scale) return cur;
    }
    prev = cur;
    have_prev = true;
  }
  throw AdaptiveError("integrate_weighted: no convergence at " + std::to_string(max_nodes) +
                      " nodes (last delta " + std::to_string(prev) + ")");
}

}  // namespace mb
