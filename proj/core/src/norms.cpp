#include "mb/norms.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mb/linalg.hpp"
#include "mb/specfun.hpp"
#include "mb/symfun.hpp"

namespace mb {

namespace {

SignedLogReal power(double base, double exponent) {
  return SignedLogReal::from_log(+1, exponent * std::log(base));
}

SignedLogReal gamma_pos(double x, const char* what) {
  if (!(x > 0.0))
    throw std::domain_error(std::string(what) + ": Gamma argument " + std::to_string(x) +
                            " must be positive");
  return SignedLogReal::from_log(+1, log_gamma(x));
}

double log_factorial(int n) { return log_gamma(static_cast<double>(n) + 1.0); }

/// prod_{i<j} (lambda_i - lambda_j + j - i), as SignedLogReal (all factors >= 1).
SignedLogReal lambda_hook_product(const Partition& lambda, int n) {
  double lm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      lm += std::log(static_cast<double>(lambda[i] - lambda[j] + j - i));
  return SignedLogReal::from_log(+1, lm);
}

}  // namespace

void ExponentVector::validate() const {
  for (double g : gammas)
    if (!std::isfinite(g)) throw std::domain_error("ExponentVector: non-finite exponent");
  for (std::size_t i = 0; i < gammas.size(); ++i)
    for (std::size_t j = i + 1; j < gammas.size(); ++j)
      if (std::fabs(gammas[i] - gammas[j]) <= 1e-9)
        throw std::domain_error("ExponentVector: exponents must be pairwise distinct (min gap 1e-9)");
}

SignedLogReal selberg(int n, double a1, double a2, double tau) {
  if (n < 0) throw std::domain_error("selberg: N must be >= 0");
  if (!(a1 > 0.0) || !(a2 > 0.0)) throw std::domain_error("selberg: a1 and a2 must be positive");
  if (!(tau >= 0.0)) throw std::domain_error("selberg: tau must be >= 0");
  SignedLogReal r = SignedLogReal::one();
  for (int j = 0; j < n; ++j) {
    r *= gamma_pos(a1 + j * tau, "selberg");
    r *= gamma_pos(a2 + j * tau, "selberg");
    r *= gamma_pos(1.0 + (j + 1) * tau, "selberg");
    r /= gamma_pos(a1 + a2 + (n + j - 1) * tau, "selberg");
    r /= gamma_pos(1.0 + tau, "selberg");
  }
  return r;
}

SignedLogReal laguerre_selberg(int n, double a1, double tau) {
  if (n < 0) throw std::domain_error("laguerre_selberg: N must be >= 0");
  if (!(a1 > 0.0)) throw std::domain_error("laguerre_selberg: a1 must be positive");
  if (!(tau >= 0.0)) throw std::domain_error("laguerre_selberg: tau must be >= 0");
  SignedLogReal r = SignedLogReal::one();
  for (int j = 0; j < n; ++j) {
    r *= gamma_pos(1.0 + (j + 1) * tau, "laguerre_selberg");
    r *= gamma_pos(a1 + j * tau, "laguerre_selberg");
    r /= gamma_pos(1.0 + tau, "laguerre_selberg");
  }
  return r;
}

SignedLogReal norm_lambda_jacobi(double a1, double a2, const Partition& lambda, int n) {
  if (static_cast<int>(lambda.size()) > n)
    throw std::domain_error("norm_lambda: lambda has more than N parts");
  SignedLogReal r = SignedLogReal::from_log(+1, log_factorial(n));
  for (int k = 1; k <= n; ++k) {
    const int lam = lambda[static_cast<std::size_t>(n - k)];
    r *= gamma_pos(a1 + k - 1 + lam, "norm_lambda_jacobi");
    r *= gamma_pos(a2 + k - 1, "norm_lambda_jacobi");
    r /= gamma_pos(a1 + a2 + n + k - 2 + lam, "norm_lambda_jacobi");
  }
  return r * lambda_hook_product(lambda, n);
}

SignedLogReal norm_lambda_laguerre(double a1, const Partition& lambda, int n) {
  if (static_cast<int>(lambda.size()) > n)
    throw std::domain_error("norm_lambda: lambda has more than N parts");
  SignedLogReal r = SignedLogReal::from_log(+1, log_factorial(n));
  for (int k = 1; k <= n; ++k)
    r *= gamma_pos(a1 + k - 1 + lambda[static_cast<std::size_t>(k - 1)], "norm_lambda_laguerre");
  return r * lambda_hook_product(lambda, n);
}

SignedLogReal norm_lambda_jacobi_prime(double a, double b, const Partition& lambda, int n) {
  if (static_cast<int>(lambda.size()) > n)
    throw std::domain_error("norm_lambda: lambda has more than N parts");
  if (!(lambda[0] < b + 1.0))
    throw std::domain_error("norm_lambda_jacobi_prime: requires lambda_1 < b + 1");
  SignedLogReal r = SignedLogReal::from_log(+1, log_factorial(n));
  for (int k = 1; k <= n; ++k) {
    const int lam = lambda[static_cast<std::size_t>(k - 1)];
    r *= gamma_pos(a + n + 1 - k + lam, "norm_lambda_jacobi_prime");
    r *= gamma_pos(b + k - lam, "norm_lambda_jacobi_prime");
    r /= gamma_pos(a + b + n + k, "norm_lambda_jacobi_prime");
  }
  return r * lambda_hook_product(lambda, n);
}

SignedLogReal norm_lambda_jacobi_selberg_route(double a1, double a2, const Partition& lambda, int n) {
  Partition lam = lambda.padded(static_cast<std::size_t>(n));
  SignedLogReal num = gen_pochhammer({a1 + n - 1.0, 1.0, lam});
  SignedLogReal den = gen_pochhammer({a1 + a2 + 2.0 * n - 2.0, 1.0, lam});
  return selberg(n, a1, a2, 1.0) * num / den * schur_at_ones(lambda, n);
}

SignedLogReal c_gamma_jacobi(double alpha2, const ExponentVector& g, int n) {
  g.validate();
  if (static_cast<int>(g.gammas.size()) != n)
    throw std::domain_error("c_gamma_jacobi: need exactly N exponents");
  SignedLogReal r = SignedLogReal::one();
  for (int l = 1; l <= n; ++l) {
    const double gl = g.gammas[static_cast<std::size_t>(l - 1)];
    r *= gamma_pos(gl + 1.0, "c_gamma_jacobi");
    r *= gamma_pos(l - 1.0 + alpha2, "c_gamma_jacobi");
    r /= gamma_pos(gl + n + alpha2, "c_gamma_jacobi");
  }
  return r;
}

SignedLogReal c_gamma_laguerre(const ExponentVector& g) {
  g.validate();
  SignedLogReal r = SignedLogReal::one();
  for (double gl : g.gammas) r *= gamma_pos(gl + 1.0, "c_gamma_laguerre");
  return r;
}

SignedLogReal c_gamma_jacobi_prime(double d, const ExponentVector& g, int n) {
  g.validate();
  if (static_cast<int>(g.gammas.size()) != n)
    throw std::domain_error("c_gamma_jacobi_prime: need exactly N exponents");
  SignedLogReal r = SignedLogReal::one();
  for (int k = 1; k <= n; ++k) {
    const double gk = g.gammas[static_cast<std::size_t>(k - 1)];
    r *= gamma_pos(1.0 + gk, "c_gamma_jacobi_prime");
    r *= gamma_pos(d + n - gk, "c_gamma_jacobi_prime");
    r /= gamma_pos(d + n + k, "c_gamma_jacobi_prime");
  }
  return r;
}

SignedLogReal z_mb(const EnsembleSpec& spec) {
  if (spec.n == 0) return SignedLogReal::one();
  spec.validate();
  if (!spec.weight.half_line())
    throw std::domain_error("z_mb: weight must be a half-line family; use z_mb_fullline");
  const int n = spec.n;
  const double theta = spec.theta;
  SignedLogReal r = power(theta, n * (n - 1) / 2.0);
  switch (spec.weight.family) {
    case WeightFamily::laguerre: {
      const double a = spec.weight.p1;
      for (int l = 1; l <= n; ++l) {
        r *= gamma_pos(theta * (l - 1) + a + 1.0, "z_mb[Laguerre]");
        r *= gamma_pos(l + 1.0, "z_mb[Laguerre]");
      }
      return r;
    }
    case WeightFamily::jacobi: {
      const double a = spec.weight.p1, b = spec.weight.p2;
      for (int l = 1; l <= n; ++l) {
        r *= gamma_pos(theta * (l - 1) + a + 1.0, "z_mb[Jacobi]");
        r *= gamma_pos(l + b, "z_mb[Jacobi]");
        r *= gamma_pos(l + 1.0, "z_mb[Jacobi]");
        r /= gamma_pos(theta * (l - 1) + n + a + b + 1.0, "z_mb[Jacobi]");
      }
      return r;
    }
    case WeightFamily::jacobi_prime: {
      const double al = spec.weight.p1, be = spec.weight.p2;
      for (int k = 1; k <= n; ++k) {
        r *= gamma_pos(theta * (k - 1) + al + 1.0, "z_mb[JacobiPrime]");
        r *= gamma_pos(be - al - n - theta * (k - 1), "z_mb[JacobiPrime]");
        r *= gamma_pos(k + 1.0, "z_mb[JacobiPrime]");
        r /= gamma_pos(be - n + k, "z_mb[JacobiPrime]");
      }
      return r;
    }
    default:
      throw std::logic_error("z_mb: unreachable");
  }
}

SignedLogReal z_mb_fullline(const EnsembleSpec& spec) {
  if (spec.n == 0) return SignedLogReal::one();
  spec.validate();
  if (!spec.weight.full_line())
    throw std::domain_error("z_mb_fullline: weight must be a full-line family");
  const int n1 = (spec.n + 1) / 2, n2 = spec.n / 2;
  auto [even, odd] = parity_reduce(spec.weight, spec.theta);
  SignedLogReal r = SignedLogReal::from_log(
      +1, log_factorial(spec.n) - log_factorial(n1) - log_factorial(n2));
  r *= z_mb({even, n1, spec.theta});
  if (n2 > 0) r *= z_mb({odd, n2, spec.theta});
  return r;
}

SignedLogReal z_normalisation(const EnsembleSpec& spec) {
  return spec.weight.half_line() ? z_mb(spec) : z_mb_fullline(spec);
}

SignedLogReal z_oracle_moments(const EnsembleSpec& spec) {
  if (spec.n == 0) return SignedLogReal::one();
  spec.validate();
  if (!spec.weight.half_line())
    throw std::domain_error("z_oracle_moments: weight must be a half-line family");
  const int n = spec.n;
  std::vector<std::vector<LogEntry>> m(static_cast<std::size_t>(n),
                                       std::vector<LogEntry>(static_cast<std::size_t>(n)));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      m[j - 1][k - 1] = LogEntry{+1, moment_log_ext(spec.weight, (j - 1) + spec.theta * (k - 1))};
  return SignedLogReal::from_log(+1, log_factorial(n)) * det_log_entries(m);
}

SignedLogReal z_oracle_fullline(const EnsembleSpec& spec) {
  if (spec.n == 0) return SignedLogReal::one();
  spec.validate();
  if (!spec.weight.full_line())
    throw std::domain_error("z_oracle_fullline: weight must be a full-line family");
  const int n = spec.n;
  auto [even, odd] = parity_reduce(spec.weight, spec.theta);
  (void)odd;
  std::vector<std::vector<LogEntry>> m(static_cast<std::size_t>(n),
                                       std::vector<LogEntry>(static_cast<std::size_t>(n)));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      if ((j + k) % 2 != 0) {
        m[j - 1][k - 1] = LogEntry{0, 0.0L};  // chequerboard zero
      } else {
        fullline_moment(spec.weight, j, k, spec.theta);  // validation path
        const double p = (j - 1) + spec.theta * (k - 1);
        m[j - 1][k - 1] = LogEntry{+1, moment_log_ext(even, p / 2.0)};
      }
    }
  return SignedLogReal::from_log(+1, log_factorial(n)) * det_log_entries(m);
}

}  // namespace mb
