#include "mb/kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mb/linalg.hpp"

namespace mb {

namespace {

long double eval_ld(const MonicPoly& p, long double x) {
  long double s = 0.0L;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) s = s * x + p.coeffs[i];
  return s;
}

double sign_factor(const KernelSpec& k, double y, int idx) {
  if (k.spec.weight.half_line() || y >= 0.0) return 1.0;
  return (idx % 2 == 0) ? 1.0 : -1.0;
}

std::vector<std::vector<double>> kernel_matrix(const KernelSpec& k, std::span<const double> pts) {
  const std::size_t n = pts.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = kernel_eval(k, pts[i], pts[j]);
  return m;
}

bool near_integer(double v) { return std::fabs(v - std::nearbyint(v)) < 1e-12; }

long double ipow_ld(long double x, int m) {
  long double r = 1.0L;
  for (int i = 0; i < m; ++i) r *= x;
  return r;
}

// One evaluation point of a Gram quadrature: position, its theta power, and
// the weight with all weight-function and substitution factors absorbed.
struct GramPoint {
  double x;
  double xt;
  double w;
};

// Evaluation points for \int_0^inf (or (0,1)) w(x) f(x, x^theta) dx.
//
// Integer theta: the classical absorbed rule; the integrand is polynomial,
// so the rule is exact once n exceeds the degree.  Half-integer theta: the
// substitution x = u^2 makes the integrand polynomial in u; the u-space
// weight endpoint exponents are absorbed into shifted Gauss rules (Jacobi
// and Jacobi-prime in one rule, Laguerre as a Gauss-Jacobi head panel plus
// Gauss-Legendre panels under the e^{-u^2} tail).  Other theta fall back to
// the plain absorbed rule and rely on the node-doubling driver.
std::vector<GramPoint> halfline_points(const WeightSpec& w, double theta, int n) {
  std::vector<GramPoint> pts;
  const bool int_theta = near_integer(theta);
  const bool half_int_theta = !int_theta && near_integer(2.0 * theta);

  if (!half_int_theta) {
    QuadratureRule rule = make_quadrature(w, n);
    pts.reserve(rule.nodes.size());
    const int m = static_cast<int>(std::lround(theta));
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      double x = rule.nodes[i];
      double xt = int_theta ? static_cast<double>(ipow_ld(x, m)) : std::pow(x, theta);
      pts.push_back({x, xt, rule.weights[i]});
    }
    return pts;
  }

  const int two_theta = static_cast<int>(std::lround(2.0 * theta));
  switch (w.family) {
    case WeightFamily::jacobi: {
      // int_0^1 x^a (1-x)^b f dx = 2 int_0^1 u^{2a+1} (1-u)^b (1+u)^b f(u^2) du
      QuadratureRule r = gauss_jacobi01(2.0 * w.p1 + 1.0, w.p2, n);
      pts.reserve(r.nodes.size());
      for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        long double u = r.nodes[i];
        double x = static_cast<double>(u * u);
        double xt = static_cast<double>(ipow_ld(u, two_theta));
        pts.push_back({x, xt, 2.0 * r.weights[i] * std::pow(1.0 + static_cast<double>(u), w.p2)});
      }
      return pts;
    }
    case WeightFamily::jacobi_prime: {
      // x = (t/(1-t))^2:  2 int_0^1 t^{2al+1} (1-t)^{2be-2al-3} S(t)^{-be} f dt,
      // S(t) = (1-t)^2 + t^2.
      QuadratureRule r = gauss_jacobi01(2.0 * w.p1 + 1.0, 2.0 * w.p2 - 2.0 * w.p1 - 3.0, n);
      pts.reserve(r.nodes.size());
      for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        long double t = r.nodes[i];
        long double u = t / (1.0L - t);
        long double s = (1.0L - t) * (1.0L - t) + t * t;
        double x = static_cast<double>(u * u);
        double xt = static_cast<double>(ipow_ld(u, two_theta));
        pts.push_back({x, xt, 2.0 * r.weights[i] * static_cast<double>(std::pow(s, static_cast<long double>(-w.p2)))});
      }
      return pts;
    }
    case WeightFamily::laguerre: {
      // 2 int_0^inf u^{2a+1} e^{-u^2} f(u^2) du: head panel on (0,1) with the
      // endpoint exponent absorbed, Gauss-Legendre panels under the tail.
      const int per_panel = std::min(n, 256);
      const int panels_end = 24;
      QuadratureRule head = gauss_jacobi01(2.0 * w.p1 + 1.0, 0.0, per_panel);
      for (std::size_t i = 0; i < head.nodes.size(); ++i) {
        long double u = head.nodes[i];
        pts.push_back({static_cast<double>(u * u), static_cast<double>(ipow_ld(u, two_theta)),
                       2.0 * head.weights[i] * static_cast<double>(std::exp(-u * u))});
      }
      QuadratureRule leg = gauss_jacobi01(0.0, 0.0, per_panel);
      for (int panel = 1; panel < panels_end; ++panel) {
        for (std::size_t i = 0; i < leg.nodes.size(); ++i) {
          long double u = static_cast<long double>(panel) + leg.nodes[i];
          long double f = std::pow(u, static_cast<long double>(2.0 * w.p1 + 1.0)) * std::exp(-u * u);
          if (f < 1e-320L && u > 3.0L) continue;
          pts.push_back({static_cast<double>(u * u), static_cast<double>(ipow_ld(u, two_theta)),
                         2.0 * leg.weights[i] * static_cast<double>(f)});
        }
      }
      return pts;
    }
    default:
      throw std::logic_error("halfline_points: half-line families only");
  }
}

using Matrix = std::vector<std::vector<double>>;

Matrix halfline_gram(const WeightSpec& w, double theta, const std::vector<MonicPoly>& ps,
                     const std::vector<MonicPoly>& qs, int n) {
  const int kp = static_cast<int>(ps.size());
  const int kq = static_cast<int>(qs.size());
  std::vector<GramPoint> pts = halfline_points(w, theta, n);
  std::vector<std::vector<long double>> acc(static_cast<std::size_t>(kp),
                                            std::vector<long double>(static_cast<std::size_t>(kq), 0.0L));
  std::vector<std::vector<long double>> comp = acc;
  std::vector<long double> pv(static_cast<std::size_t>(kp)), qv(static_cast<std::size_t>(kq));
  for (const GramPoint& pt : pts) {
    for (int j = 0; j < kp; ++j) pv[j] = eval_ld(ps[static_cast<std::size_t>(j)], pt.x);
    for (int l = 0; l < kq; ++l) qv[l] = eval_ld(qs[static_cast<std::size_t>(l)], pt.xt);
    for (int j = 0; j < kp; ++j) {
      const long double wp = static_cast<long double>(pt.w) * pv[j];
      for (int l = 0; l < kq; ++l) {
        long double y = wp * qv[l] - comp[j][l];
        long double t = acc[j][l] + y;
        comp[j][l] = (t - acc[j][l]) - y;
        acc[j][l] = t;
      }
    }
  }
  Matrix g(static_cast<std::size_t>(kp), std::vector<double>(static_cast<std::size_t>(kq)));
  for (int j = 0; j < kp; ++j)
    for (int l = 0; l < kq; ++l) g[j][l] = static_cast<double>(acc[j][l]);
  return g;
}

// Full Gram matrix at resolution n.  Full-line weights decompose by parity:
// the same-parity blocks are the parity-reduced half-line Grams, the
// cross-parity entries are evaluated on the symmetric rule where the folded
// integrand cancels pointwise.
struct GramProblem {
  WeightSpec w;
  double theta = 1.0;
  int kmax = 1;
  std::vector<MonicPoly> ps, qs;          // half-line polys, or parity-lifted (full-line)
  std::vector<MonicPoly> even_p, even_q;  // reduced-sector polys (full-line only)
  std::vector<MonicPoly> odd_p, odd_q;
  WeightSpec even_w, odd_w;

  static GramProblem build(const WeightSpec& w, double theta, int kmax) {
    GramProblem gp;
    gp.w = w;
    gp.theta = theta;
    gp.kmax = kmax;
    if (w.half_line()) {
      for (int j = 0; j < kmax; ++j) {
        gp.ps.push_back(p_poly(w, j, theta));
        gp.qs.push_back(q_poly(w, j, theta));
      }
      return gp;
    }
    auto [even, odd] = parity_reduce(w, theta);
    gp.even_w = even;
    gp.odd_w = odd;
    for (int j = 0; j < kmax; ++j) {
      gp.ps.push_back(parity_lift(Side::p, w, j, theta));
      gp.qs.push_back(parity_lift(Side::q, w, j, theta));
    }
    for (int a = 0; 2 * a < kmax; ++a) {
      gp.even_p.push_back(p_poly(even, a, theta));
      gp.even_q.push_back(q_poly(even, a, theta));
    }
    for (int a = 0; 2 * a + 1 < kmax; ++a) {
      gp.odd_p.push_back(p_poly(odd, a, theta));
      gp.odd_q.push_back(q_poly(odd, a, theta));
    }
    return gp;
  }

  Matrix evaluate(int n) const {
    if (w.half_line()) return halfline_gram(w, theta, ps, qs, n);

    Matrix g(static_cast<std::size_t>(kmax), std::vector<double>(static_cast<std::size_t>(kmax), 0.0));
    Matrix ge = halfline_gram(even_w, theta, even_p, even_q, n);
    Matrix go = halfline_gram(odd_w, theta, odd_p, odd_q, n);
    for (std::size_t a = 0; a < even_p.size(); ++a)
      for (std::size_t b = 0; b < even_q.size(); ++b) g[2 * a][2 * b] = ge[a][b];
    for (std::size_t a = 0; a < odd_p.size(); ++a)
      for (std::size_t b = 0; b < odd_q.size(); ++b) g[2 * a + 1][2 * b + 1] = go[a][b];

    // Cross-parity entries: odd integrand, evaluated on the +- paired rule.
    QuadratureRule rule = make_quadrature(w, std::min(n, 512));
    for (int j = 0; j < kmax; ++j)
      for (int l = 0; l < kmax; ++l) {
        if ((j + l) % 2 == 0) continue;
        long double s = 0.0L;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          double x = rule.nodes[i];
          double xt = std::pow(std::fabs(x), theta);
          double sl = (x < 0 && l % 2 != 0) ? -1.0 : 1.0;
          s += static_cast<long double>(rule.weights[i]) *
               eval_ld(ps[static_cast<std::size_t>(j)], x) * sl *
               eval_ld(qs[static_cast<std::size_t>(l)], xt);
        }
        g[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] = static_cast<double>(s);
      }
    return g;
  }
};

// Node-doubling driver: resolutions 64, 128, ..., 4096 until two successive
// Gram matrices agree entrywise to tol/10 under the sqrt(h_j h_l) scale.
Matrix adaptive_gram(const GramProblem& gp, const std::vector<double>& h, double tol) {
  const int kmax = gp.kmax;
  std::vector<std::vector<double>> scale(static_cast<std::size_t>(kmax),
                                         std::vector<double>(static_cast<std::size_t>(kmax)));
  for (int j = 0; j < kmax; ++j)
    for (int l = 0; l < kmax; ++l)
      scale[j][l] = std::sqrt(h[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(l)]);

  Matrix prev;
  double last_delta = std::numeric_limits<double>::infinity();
  for (int n = 64; n <= 4096; n *= 2) {
    Matrix cur = gp.evaluate(n);
    if (!prev.empty()) {
      double delta = 0.0;
      for (int j = 0; j < kmax; ++j)
        for (int l = 0; l < kmax; ++l)
          delta = std::max(delta, std::fabs(cur[j][l] - prev[j][l]) / scale[j][l]);
      last_delta = delta;
      if (delta < tol / 10.0) return cur;
    }
    prev = std::move(cur);
  }
  throw AdaptiveError("gram quadrature not converged at 4096 nodes for " +
                      std::string(family_name(gp.w.family)) + ", theta " + std::to_string(gp.theta) +
                      "; last normalized delta " + std::to_string(last_delta));
}

std::vector<double> norm_values(const WeightSpec& w, double theta, int kmax) {
  std::vector<double> h(static_cast<std::size_t>(kmax));
  for (int j = 0; j < kmax; ++j) {
    SignedLogReal v = h_k(w, theta, j);
    if (v.sign() != +1) throw std::runtime_error("non-positive norm h_" + std::to_string(j));
    h[static_cast<std::size_t>(j)] = v.to_real();
  }
  return h;
}

}  // namespace

KernelSpec build_kernel(const EnsembleSpec& spec) {
  spec.validate();
  KernelSpec k;
  k.spec = spec;
  k.norms = norm_sequence(spec.weight, spec.theta, spec.n);
  k.polys_p.reserve(static_cast<std::size_t>(spec.n));
  k.polys_q.reserve(static_cast<std::size_t>(spec.n));
  k.inv_h.reserve(static_cast<std::size_t>(spec.n));
  for (int j = 0; j < spec.n; ++j) {
    if (spec.weight.half_line()) {
      k.polys_p.push_back(p_poly(spec.weight, j, spec.theta));
      k.polys_q.push_back(q_poly(spec.weight, j, spec.theta));
    } else {
      k.polys_p.push_back(parity_lift(Side::p, spec.weight, j, spec.theta));
      k.polys_q.push_back(parity_lift(Side::q, spec.weight, j, spec.theta));
    }
    const SignedLogReal& h = k.norms.values[static_cast<std::size_t>(j)];
    if (h.sign() != +1)
      throw std::runtime_error("build_kernel: non-positive norm h_" + std::to_string(j));
    k.inv_h.push_back(std::exp(-h.logmag()));
  }
  return k;
}

double kernel_eval(const KernelSpec& k, double x, double y) {
  const double yt = std::pow(std::fabs(y), k.spec.theta);
  long double s = 0.0L;
  for (int j = 0; j < k.spec.n; ++j) {
    long double term = eval_ld(k.polys_p[static_cast<std::size_t>(j)], x) *
                       eval_ld(k.polys_q[static_cast<std::size_t>(j)], yt) *
                       static_cast<long double>(k.inv_h[static_cast<std::size_t>(j)]);
    s += static_cast<long double>(sign_factor(k, y, j)) * term;
  }
  return static_cast<double>(s);
}

double kernel_eval_weighted(const KernelSpec& k, double x, double y) {
  double wx = weight_eval(k.spec.weight, x);
  double wy = weight_eval(k.spec.weight, y);
  return std::sqrt(wx * wy) * kernel_eval(k, x, y);
}

double correlation_bare(const KernelSpec& k, std::span<const double> points) {
  if (static_cast<int>(points.size()) > k.spec.n)
    throw std::domain_error("correlation: n must be <= N");
  return det_lu(kernel_matrix(k, points)).value;
}

double correlation(const KernelSpec& k, std::span<const double> points) {
  double det = correlation_bare(k, points);
  for (double x : points) det *= weight_eval(k.spec.weight, x);
  return det;
}

double kernel_trace(const KernelSpec& k, double rel_tol) {
  // trace = sum_k G_kk / h_k with G the biorthogonal Gram matrix.
  GramProblem gp = GramProblem::build(k.spec.weight, k.spec.theta, k.spec.n);
  std::vector<double> h = norm_values(k.spec.weight, k.spec.theta, k.spec.n);
  Matrix g = adaptive_gram(gp, h, rel_tol * 10.0);
  double trace = 0.0;
  for (int j = 0; j < k.spec.n; ++j) trace += g[j][j] / h[static_cast<std::size_t>(j)];
  return trace;
}

double projection_error(const KernelSpec& k, double x, double z, double rel_tol) {
  // int w(y) K(x,y) K(y,z) dy = sum_{k,l} p_k(x) sgn(z)^l q_l(|z|^theta)
  //                              G_{lk} / (h_k h_l).
  const int n = k.spec.n;
  GramProblem gp = GramProblem::build(k.spec.weight, k.spec.theta, n);
  std::vector<double> h = norm_values(k.spec.weight, k.spec.theta, n);
  Matrix g = adaptive_gram(gp, h, rel_tol * 10.0);
  const double zt = std::pow(std::fabs(z), k.spec.theta);
  long double projected = 0.0L;
  for (int kk = 0; kk < n; ++kk)
    for (int l = 0; l < n; ++l) {
      long double term = eval_ld(k.polys_p[static_cast<std::size_t>(kk)], x) *
                         static_cast<long double>(sign_factor(k, z, l)) *
                         eval_ld(k.polys_q[static_cast<std::size_t>(l)], zt) *
                         static_cast<long double>(g[static_cast<std::size_t>(l)][static_cast<std::size_t>(kk)]) /
                         (static_cast<long double>(h[static_cast<std::size_t>(kk)]) *
                          static_cast<long double>(h[static_cast<std::size_t>(l)]));
      projected += term;
    }
  double direct = kernel_eval(k, x, z);
  return std::fabs(static_cast<double>(projected) - direct) / std::fabs(direct);
}

double verify_biortho(const WeightSpec& w, double theta, int kmax, double tol) {
  if (kmax < 1 || kmax > 10) throw std::domain_error("verify_biortho: need 1 <= kmax <= 10");
  w.validate();
  GramProblem gp = GramProblem::build(w, theta, kmax);
  std::vector<double> h = norm_values(w, theta, kmax);
  Matrix g = adaptive_gram(gp, h, tol);
  double err = 0.0;
  for (int j = 0; j < kmax; ++j)
    for (int l = 0; l < kmax; ++l) {
      double target = (j == l) ? h[static_cast<std::size_t>(j)] : 0.0;
      double scale = std::sqrt(h[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(l)]);
      err = std::max(err, std::fabs(g[j][l] - target) / scale);
    }
  return err;
}

}  // namespace mb
