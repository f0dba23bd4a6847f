#include "mb/symfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mb/linalg.hpp"

namespace mb {

double vandermonde(std::span<const double> x) {
  const std::size_t n = x.size();
  double p = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p *= x[i] - x[j];
  return p;
}

double elementary_symmetric(int nu, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  if (nu < 0 || nu > n)
    throw std::domain_error("elementary_symmetric: nu out of range 0.." + std::to_string(n));
  // e[j] after processing k variables holds e_j(x_1..x_k).
  std::vector<long double> e(static_cast<std::size_t>(nu) + 1, 0.0L);
  e[0] = 1.0L;
  for (int k = 0; k < n; ++k)
    for (int j = std::min(nu, k + 1); j >= 1; --j)
      e[j] += static_cast<long double>(x[k]) * e[j - 1];
  return static_cast<double>(e[nu]);
}

double schur_eval(const Partition& lambda, std::span<const double> x) {
  const std::size_t n = x.size();
  if (lambda.size() > n)
    throw std::invalid_argument("schur_eval: partition has more parts than points");
  for (double v : x)
    if (!std::isfinite(v)) throw std::domain_error("schur_eval: non-finite point");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::fabs(x[i] - x[j]) <= 1e-8)
        throw std::domain_error(
            "schur_eval: coincident points (min gap 1e-8); use schur_at_ones for the (1)^N specialisation");

  std::vector<std::vector<double>> num(n, std::vector<double>(n));
  std::vector<std::vector<double>> den(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const int e_num = static_cast<int>(n - 1 - i) + lambda[i];
    const int e_den = static_cast<int>(n - 1 - i);
    for (std::size_t j = 0; j < n; ++j) {
      num[i][j] = std::pow(x[j], e_num);
      den[i][j] = std::pow(x[j], e_den);
    }
  }
  DetResult dn = det_lu(std::move(num));
  DetResult dd = det_lu(std::move(den));
  if (dd.value == 0.0) throw std::domain_error("schur_eval: Vandermonde denominator vanished");
  return dn.value / dd.value;
}

SignedLogReal schur_at_ones(const Partition& lambda, int n) {
  if (static_cast<int>(lambda.size()) > n)
    throw std::invalid_argument("schur_at_ones: partition has more parts than variables");
  // All factors positive: lambda_i >= lambda_j for i < j.
  double lm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      lm += std::log(static_cast<double>(lambda[i] - lambda[j] + j - i)) -
            std::log(static_cast<double>(j - i));
  return SignedLogReal::from_log(+1, lm);
}

Partition mu_partition(double theta, int k, int j) {
  if (std::fabs(theta - std::nearbyint(theta)) > 1e-9)
    throw std::domain_error("mu_partition: theta must be a positive integer");
  int t = static_cast<int>(std::lround(theta));
  if (t < 1) throw std::domain_error("mu_partition: theta must be a positive integer");
  if (j < 0 || j > k) throw std::domain_error("mu_partition: j out of range 0..k");
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int l = 1; l <= k; ++l)
    parts[static_cast<std::size_t>(l - 1)] = (t - 1) * (k - l) + (l <= j ? t : 0);
  return Partition(std::move(parts));
}

}  // namespace mb
