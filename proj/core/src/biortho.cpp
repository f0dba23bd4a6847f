#include "mb/biortho.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mb/linalg.hpp"
#include "mb/quadrature.hpp"
#include "mb/specfun.hpp"

namespace mb {

namespace {

// Exact binomial coefficients up to n = 60 (extended precision keeps the
// 64-bit-mantissa values exact; C(60,30) ~ 1.18e17 < 2^63).
long double binomial_ld(int n, int k) {
  if (k < 0 || k > n) return 0.0L;
  k = std::min(k, n - k);
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::roundl(r);
}

SignedLogReal binomial_slr(int n, int k) {
  return SignedLogReal::from_real(static_cast<double>(binomial_ld(n, k)));
}

SignedLogReal gamma_pos(double x, const char* what) {
  if (!(x > 0.0))
    throw std::domain_error(std::string(what) + ": Gamma argument " + std::to_string(x) +
                            " must be positive");
  return SignedLogReal::from_log(+1, log_gamma(x));
}

// Kahan-compensated long double accumulator for the alternating coefficient
// sums.  The terms here are plain real products; keeping them linear avoids
// the ~1e-15 relative noise a log-domain round trip would inject, which the
// cancellation amplifies past the monic gate at k ~ 7.
struct KahanLd {
  long double s = 0.0L, c = 0.0L;
  void add(long double v) {
    long double y = v - c;
    long double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

// prod_l (gamma_l + s + 1) in extended precision.
long double gamma_shift_product_ld(const std::vector<double>& gammas, int s) {
  long double r = 1.0L;
  for (double g : gammas) r *= static_cast<long double>(g) + s + 1.0L;
  return r;
}

long double factorial_ld(int n) {
  long double r = 1.0L;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// inner(nu) = sum_{s<=nu} (-1)^{k-s} / ((nu-s)! s!) prod_l (gamma_l + s + 1)
std::vector<long double> inner_sums_ld(const std::vector<double>& gammas, int k) {
  std::vector<long double> shift(static_cast<std::size_t>(k) + 1);
  for (int s = 0; s <= k; ++s) shift[s] = gamma_shift_product_ld(gammas, s);
  std::vector<long double> inner(static_cast<std::size_t>(k) + 1);
  for (int nu = 0; nu <= k; ++nu) {
    KahanLd sum;
    for (int s = 0; s <= nu; ++s) {
      long double t = shift[s] / (factorial_ld(nu - s) * factorial_ld(s));
      sum.add(((k - s) % 2 == 0) ? t : -t);
    }
    inner[nu] = sum.s;
  }
  return inner;
}

MonicPoly finalize_monic(const std::vector<KahanLd>& acc, int k, const char* what) {
  MonicPoly p;
  p.coeffs.resize(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) p.coeffs[i] = static_cast<double>(acc[i].s);
  if (std::fabs(p.coeffs.back() - 1.0) > 1e-10)
    throw std::runtime_error(std::string(what) + ": assembled polynomial is not monic (lead " +
                             std::to_string(p.coeffs.back()) + ")");
  p.coeffs.back() = 1.0;
  return p;
}

// Shared assembly of the mixed-basis polynomials
//   prefactor * sum_nu outer(nu) (x/(1 -+ x))^nu (1 -+ x)^k inner(nu),
// expanded to monomials.  sign = -1 for the (1-x) Jacobi basis, +1 for the
// (1+x) Jacobi-prime basis.
MonicPoly assemble_mixed_basis(int k, int sign, long double prefactor,
                               const std::vector<long double>& outer,
                               const std::vector<long double>& inner, const char* what) {
  std::vector<KahanLd> acc(static_cast<std::size_t>(k) + 1);
  for (int nu = 0; nu <= k; ++nu) {
    long double base = prefactor * outer[nu] * inner[nu];
    if (base == 0.0L) continue;
    // x^nu (1 + sign*x)^{k-nu} = sum_t C(k-nu, t) sign^t x^{nu+t}
    for (int t = 0; t <= k - nu; ++t) {
      long double term = base * binomial_ld(k - nu, t);
      if (sign < 0 && (t % 2 != 0)) term = -term;
      acc[static_cast<std::size_t>(nu + t)].add(term);
    }
  }
  return finalize_monic(acc, k, what);
}

std::vector<double> theta_grid(double a, double theta, int k) {
  std::vector<double> g(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) g[j] = theta * j + a;
  return g;
}

}  // namespace

SignedLogReal h_k(const WeightSpec& w, double theta, int k) {
  if (k < 0) throw std::domain_error("h_k: k must be >= 0");
  EnsembleSpec upper{w, k + 1, theta};
  SignedLogReal z_up = z_normalisation(upper);
  SignedLogReal z_lo = (k == 0) ? SignedLogReal::one() : z_normalisation({w, k, theta});
  return z_up / z_lo / SignedLogReal::from_real(static_cast<double>(k) + 1.0);
}

SignedLogReal h_k_printed(const WeightSpec& w, double theta, int k) {
  if (k < 0) throw std::domain_error("h_k_printed: k must be >= 0");
  if (!w.half_line()) throw std::domain_error("h_k_printed: closed forms cover half-line families");
  switch (w.family) {
    case WeightFamily::laguerre: {
      const double a = w.p1;
      SignedLogReal r = SignedLogReal::from_log(+1, k * std::log(theta));
      r *= gamma_pos(theta * k + a + 1.0, "h_k_printed[L]");
      r *= gamma_pos(k + 1.0, "h_k_printed[L]");
      return r;
    }
    case WeightFamily::jacobi: {
      const double a = w.p1, b = w.p2;
      const double u = (k + a + b + 1.0) / theta;
      SignedLogReal r = gamma_pos(theta * k + a + 1.0, "h_k_printed[J]");
      r *= gamma_pos(k + 1.0, "h_k_printed[J]");
      r *= gamma_pos(k + b + 1.0, "h_k_printed[J]");
      r *= gamma_pos(u, "h_k_printed[J]");
      r /= gamma_pos((theta + 1.0) * k + a + b + 2.0, "h_k_printed[J]");
      r /= gamma_pos(k + 1.0 + u, "h_k_printed[J]");
      return r;
    }
    case WeightFamily::jacobi_prime: {
      const double al = w.p1, be = w.p2;
      const double u = (be - al - k - 1.0) / theta;
      SignedLogReal r = gamma_pos(theta * k + al + 1.0, "h_k_printed[Jp]");
      r *= gamma_pos(k + 1.0, "h_k_printed[Jp]");
      r *= gamma_pos(be - al - 1.0 - (theta + 1.0) * k, "h_k_printed[Jp]");
      r *= gamma_pos(u - k + 1.0, "h_k_printed[Jp]");
      r /= gamma_pos(u + 1.0, "h_k_printed[Jp]");
      r /= gamma_pos(be - k, "h_k_printed[Jp]");
      return r;
    }
    default:
      throw std::logic_error("h_k_printed: unreachable");
  }
}

HkDiagnostic h_k_diagnostic(const WeightSpec& w, double theta, int k) {
  HkDiagnostic d{h_k(w, theta, k), h_k_printed(w, theta, k), 0.0};
  d.rel_discrepancy = rel_diff(d.printed, d.z_ratio);
  return d;
}

NormSequence norm_sequence(const WeightSpec& w, double theta, int kmax) {
  NormSequence s{w, theta, {}};
  s.values.reserve(static_cast<std::size_t>(kmax));
  for (int k = 0; k < kmax; ++k) s.values.push_back(h_k(w, theta, k));
  return s;
}

MonicPoly q_poly(const WeightSpec& w, int k, double theta) {
  if (k < 0) throw std::domain_error("q_poly: k must be >= 0");
  if (!w.half_line()) throw std::domain_error("q_poly: half-line weights only; use parity_lift");
  if (k > 0) EnsembleSpec{w, k, theta}.validate();
  MonicPoly p;
  p.coeffs.resize(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    SignedLogReal c = binomial_slr(k, j);
    if ((k - j) % 2 != 0) c = -c;
    switch (w.family) {
      case WeightFamily::laguerre: {
        const double a = w.p1;
        c *= gamma_pos(1.0 + a + theta * k, "q_poly[L]") / gamma_pos(1.0 + a + theta * j, "q_poly[L]");
        break;
      }
      case WeightFamily::jacobi: {
        const double a = w.p1, b = w.p2;
        c *= gamma_pos(1.0 + a + b + k + theta * j, "q_poly[J]") /
             gamma_pos(1.0 + a + b + k + theta * k, "q_poly[J]");
        c *= gamma_pos(1.0 + a + theta * k, "q_poly[J]") / gamma_pos(1.0 + a + theta * j, "q_poly[J]");
        break;
      }
      case WeightFamily::jacobi_prime: {
        const double al = w.p1, be = w.p2;
        c *= gamma_pos(be - k - theta * k - al, "q_poly[Jp]") /
             gamma_pos(be - k - theta * j - al, "q_poly[Jp]");
        c *= gamma_pos(1.0 + al + theta * k, "q_poly[Jp]") /
             gamma_pos(1.0 + al + theta * j, "q_poly[Jp]");
        break;
      }
      default:
        throw std::logic_error("q_poly: unreachable");
    }
    p.coeffs[static_cast<std::size_t>(j)] = c.to_real();
  }
  p.coeffs.back() = 1.0;
  return p;
}

MonicPoly p_poly_gamma(const PGammaFamily& family, const ExponentVector& gammas, int k) {
  if (k < 0) throw std::domain_error("p_poly_gamma: k must be >= 0");
  if (static_cast<int>(gammas.gammas.size()) != k)
    throw std::domain_error("p_poly_gamma: need exactly k exponents");
  gammas.validate();
  const std::vector<double>& g = gammas.gammas;
  std::vector<long double> inner = inner_sums_ld(g, k);

  switch (family.kind) {
    case PGammaFamily::Kind::laguerre: {
      std::vector<KahanLd> acc(static_cast<std::size_t>(k) + 1);
      for (int nu = 0; nu <= k; ++nu) acc[nu].add(inner[nu]);
      return finalize_monic(acc, k, "p_poly_gamma[L]");
    }
    case PGammaFamily::Kind::jacobi: {
      const double alpha2 = family.param;
      long double pref = 1.0L;
      for (double gl : g) {
        long double d = static_cast<long double>(gl) + k + alpha2;
        if (d <= 0.0L) throw std::domain_error("p_poly_gamma[J]: gamma_l + k + alpha2 must be positive");
        pref /= d;
      }
      // outer(nu) = Gamma(k+alpha2) / Gamma(k-nu+alpha2) = prod_{i=1..nu} (k-i+alpha2)
      std::vector<long double> outer(static_cast<std::size_t>(k) + 1, 1.0L);
      for (int nu = 1; nu <= k; ++nu) {
        long double d = static_cast<long double>(k - nu) + alpha2;
        if (d <= 0.0L) throw std::domain_error("p_poly_gamma[J]: k - nu + alpha2 must be positive");
        outer[nu] = outer[nu - 1] * d;
      }
      return assemble_mixed_basis(k, -1, pref, outer, inner, "p_poly_gamma[J]");
    }
    case PGammaFamily::Kind::jacobi_prime: {
      const double beta = family.param;
      long double pref = 1.0L;
      for (double gl : g) {
        long double d = static_cast<long double>(beta) - k - gl - 1.0L;
        if (d <= 0.0L)
          throw std::domain_error("p_poly_gamma[Jp]: beta - k - gamma_l - 1 must be positive");
        pref /= d;
      }
      // outer(nu) = Gamma(beta-k+nu) / Gamma(beta-k) = prod_{i=0..nu-1} (beta-k+i)
      std::vector<long double> outer(static_cast<std::size_t>(k) + 1, 1.0L);
      for (int nu = 1; nu <= k; ++nu)
        outer[nu] = outer[nu - 1] * (static_cast<long double>(beta) - k + nu - 1.0L);
      return assemble_mixed_basis(k, +1, pref, outer, inner, "p_poly_gamma[Jp]");
    }
  }
  throw std::logic_error("p_poly_gamma: unreachable");
}

MonicPoly p_poly(const WeightSpec& w, int k, double theta) {
  if (k < 0) throw std::domain_error("p_poly: k must be >= 0");
  if (!w.half_line()) throw std::domain_error("p_poly: half-line weights only; use parity_lift");
  if (k > 0) EnsembleSpec{w, k, theta}.validate();
  switch (w.family) {
    case WeightFamily::laguerre:
      return p_poly_gamma(PGammaFamily::Laguerre(), {theta_grid(w.p1, theta, k)}, k);
    case WeightFamily::jacobi:
      return p_poly_gamma(PGammaFamily::Jacobi(w.p2 + 1.0), {theta_grid(w.p1, theta, k)}, k);
    case WeightFamily::jacobi_prime:
      return p_poly_gamma(PGammaFamily::JacobiPrime(w.p2), {theta_grid(w.p1, theta, k)}, k);
    default:
      throw std::logic_error("p_poly: unreachable");
  }
}

MonicPoly oracle_char_poly(Side side, const WeightSpec& w, int k, double theta) {
  if (k < 0 || k > 6) throw std::domain_error("oracle_char_poly: need 0 <= k <= 6 (subset sums)");
  if (!w.half_line()) throw std::domain_error("oracle_char_poly: half-line weights only");
  MonicPoly p;
  p.coeffs.assign(static_cast<std::size_t>(k) + 1, 0.0);
  p.coeffs.back() = 1.0;
  if (k == 0) return p;

  // Base Andreief matrix: rows on the integer grid, columns on the theta
  // grid; entries in extended precision to keep the ill-conditioned Hankel
  // determinant ratios accurate.
  auto moment_at = [&](int i, int j, int row_shift, bool col_shifted) {
    double e = static_cast<double>(i) + row_shift +
               theta * (static_cast<double>(j) + (col_shifted ? 1.0 : 0.0));
    return LogEntry{+1, moment_log_ext(w, e)};
  };
  std::vector<std::vector<LogEntry>> base(static_cast<std::size_t>(k),
                                          std::vector<LogEntry>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) base[i][j] = moment_at(i, j, 0, false);
  SignedLogReal det_base = det_log_entries(base);
  if (det_base.is_zero())
    throw std::runtime_error("oracle_char_poly: singular base moment matrix");

  for (int nu = 0; nu < k; ++nu) {
    const int r = k - nu;  // subset size
    // Enumerate r-subsets of {0..k-1} by bitmask.
    LogSum sum;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      if (__builtin_popcount(mask) != r) continue;
      std::vector<std::vector<LogEntry>> m(static_cast<std::size_t>(k),
                                           std::vector<LogEntry>(static_cast<std::size_t>(k)));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          if (side == Side::q) {
            m[i][j] = moment_at(i, j, 0, (mask >> j) & 1u);
          } else {
            m[i][j] = moment_at(i, j, (mask >> i) & 1u, false);
          }
        }
      sum.add(det_log_entries(m) / det_base);
    }
    SignedLogReal c = sum.total();
    if (r % 2 != 0) c = -c;
    p.coeffs[static_cast<std::size_t>(nu)] = c.to_real();
  }
  return p;
}

double f_nu_laguerre(int nu, const ExponentVector& gammas) {
  const int n = static_cast<int>(gammas.gammas.size());
  if (nu < 0 || nu > n) throw std::domain_error("f_nu_laguerre: need 0 <= nu <= N");
  KahanLd sum;
  for (int s = 0; s <= nu; ++s) {
    long double t = gamma_shift_product_ld(gammas.gammas, s) / (factorial_ld(nu - s) * factorial_ld(s));
    sum.add(((nu - s) % 2 == 0) ? t : -t);
  }
  return static_cast<double>(sum.s);
}

double f_nu_laguerre_bruteforce(int nu, const ExponentVector& gammas) {
  gammas.validate();
  const int n = static_cast<int>(gammas.gammas.size());
  if (nu < 0 || nu > n) throw std::domain_error("f_nu_laguerre_bruteforce: need 0 <= nu <= N");
  if (n > 20) throw std::domain_error("f_nu_laguerre_bruteforce: N too large for subset sums");
  const std::vector<double>& g = gammas.gammas;
  // C_N^gamma[e^{-x}] = N! prod_l Gamma(gamma_l+1) prod_{i<j} (gamma_i - gamma_j);
  // the ratio for a shifted subset S is
  //   prod_{l in S} (gamma_l + 1) * Vdm(gamma + 1_S) / Vdm(gamma).
  LogSum sum;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != n - nu) continue;
    SignedLogReal term = SignedLogReal::one();
    std::vector<double> shifted = g;
    for (int l = 0; l < n; ++l)
      if ((mask >> l) & 1u) {
        term *= SignedLogReal::from_real(g[l] + 1.0);
        shifted[l] += 1.0;
      }
    SignedLogReal vdm_ratio = SignedLogReal::one();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        vdm_ratio *= SignedLogReal::from_real(shifted[i] - shifted[j]) /
                     SignedLogReal::from_real(g[i] - g[j]);
    sum.add(term * vdm_ratio);
  }
  return sum.total().to_real();
}

MonicPoly parity_lift(Side side, const WeightSpec& w, int k, double theta) {
  if (k < 0) throw std::domain_error("parity_lift: k must be >= 0");
  if (!w.full_line()) throw std::domain_error("parity_lift: full-line weights only");
  auto [even, odd] = parity_reduce(w, theta);
  const int m = k / 2;
  const WeightSpec& reduced = (k % 2 == 0) ? even : odd;
  MonicPoly r = (side == Side::q) ? q_poly(reduced, m, theta) : p_poly(reduced, m, theta);
  MonicPoly lifted;
  lifted.coeffs.assign(static_cast<std::size_t>(k) + 1, 0.0);
  for (int i = 0; i <= m; ++i)
    lifted.coeffs[static_cast<std::size_t>(2 * i + (k % 2))] = r.coeffs[static_cast<std::size_t>(i)];
  return lifted;
}

MonicPoly reference_classical(const WeightSpec& w, int k) {
  if (k < 0) throw std::domain_error("reference_classical: k must be >= 0");
  RecurrenceCoeffs rc;
  switch (w.family) {
    case WeightFamily::laguerre:
      rc = laguerre_recurrence(w.p1, k + 1);
      break;
    case WeightFamily::jacobi:
      rc = jacobi01_recurrence(w.p1, w.p2, k + 1);
      break;
    default:
      throw std::domain_error("reference_classical: Laguerre and Jacobi only");
  }
  // pi_{j+1} = (x - alpha_j) pi_j - beta_j pi_{j-1}, in long double.
  std::vector<long double> prev = {1.0L};
  if (k == 0) return MonicPoly{{1.0}};
  std::vector<long double> cur = {-static_cast<long double>(rc.alpha[0]), 1.0L};
  for (int j = 1; j < k; ++j) {
    std::vector<long double> next(cur.size() + 1, 0.0L);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += cur[i];
      next[i] -= static_cast<long double>(rc.alpha[j]) * cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i)
      next[i] -= static_cast<long double>(rc.beta[j]) * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  MonicPoly p;
  p.coeffs.assign(cur.begin(), cur.end());
  p.coeffs.back() = 1.0;
  return p;
}

}  // namespace mb
