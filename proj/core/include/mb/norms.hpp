#pragma once

#include <vector>

#include "mb/partition.hpp"
#include "mb/signed_log.hpp"
#include "mb/weights.hpp"

namespace mb {

/// Exponents gamma_1, ..., gamma_N of the multi-parameter densities.
/// The lambda-derived construction gamma_i = N - i + lambda_i + alpha_1 - 1
/// is strictly decreasing; c_gamma never reorders its input.
struct ExponentVector {
  std::vector<double> gammas;

  /// Pairwise distinct with min gap > 1e-9.
  void validate() const;
};

/// Selberg integral
///   S_N(a1, a2, tau) = prod_{j=0}^{N-1}
///     Gamma(a1+j tau) Gamma(a2+j tau) Gamma(1+(j+1)tau)
///     / (Gamma(a1+a2+(N+j-1)tau) Gamma(1+tau)).
/// tau = 0 is allowed and collapses to B(a1,a2)^N.
SignedLogReal selberg(int n, double a1, double a2, double tau);

/// Laguerre limit W_N(a1, tau) = prod_j Gamma(1+(j+1)tau) Gamma(a1+j tau) / Gamma(1+tau).
SignedLogReal laguerre_selberg(int n, double a1, double tau);

/// Normalisation of the Schur-deformed classical densities: the value of
///   \int_{D^N} prod_l w0(x_l) prod_{i<j}(x_i-x_j) det[x_j^{N-i+lambda_i}] dx
/// over the unordered domain, with w0 the Selberg-type base weight
///   Jacobi       x^{a1-1} (1-x)^{a2-1}
///   Laguerre     x^{a1-1} e^{-x}
///   JacobiPrime  x^{a} (1+x)^{-(a+b+2N)}     (well defined for lambda_1 < b+1).
/// Two algebraic routes are exposed: the per-k gamma products and the
/// Selberg-times-Pochhammer form; they agree to roundoff.
SignedLogReal norm_lambda_jacobi(double a1, double a2, const Partition& lambda, int n);
SignedLogReal norm_lambda_laguerre(double a1, const Partition& lambda, int n);
SignedLogReal norm_lambda_jacobi_prime(double a, double b, const Partition& lambda, int n);

/// Selberg-times-Pochhammer route for the Jacobi case:
///   S_N(a1,a2,1) * (a1+N-1)_lambda / (a1+a2+2N-2)_lambda * s_lambda((1)^N).
SignedLogReal norm_lambda_jacobi_selberg_route(double a1, double a2, const Partition& lambda, int n);

/// Normalisations C_N^gamma of the gamma-parametrised polynomial ensembles:
///   Jacobi       prod_l Gamma(gamma_l+1) Gamma(l-1+alpha2) / Gamma(gamma_l+N+alpha2)
///   Laguerre     prod_l Gamma(gamma_l+1)
///   JacobiPrime  prod_k Gamma(1+gamma_k) Gamma(d+N-gamma_k) / Gamma(d+N+k)
SignedLogReal c_gamma_jacobi(double alpha2, const ExponentVector& g, int n);
SignedLogReal c_gamma_laguerre(const ExponentVector& g);
SignedLogReal c_gamma_jacobi_prime(double d, const ExponentVector& g, int n);

/// Z_N of the half-line ensemble: the unordered-domain integral of
/// prod_{i<j} (x_j-x_i)(x_j^theta-x_i^theta) prod_k w(x_k), in closed form.
/// N = 0 returns 1.
SignedLogReal z_mb(const EnsembleSpec& spec);

/// Z_N of an even full-line ensemble via the parity factorisation
///   (N! / (N1! N2!)) Z^+_{N1}[even reduced] Z^+_{N2}[odd reduced],
/// N1 = floor((N+1)/2), N2 = floor(N/2).
SignedLogReal z_mb_fullline(const EnsembleSpec& spec);

/// Dispatches z_mb / z_mb_fullline on the weight family.
SignedLogReal z_normalisation(const EnsembleSpec& spec);

/// Brute-force oracle: N! det[ moment(w, j-1+theta(k-1)) ]_{j,k=1..N}.
SignedLogReal z_oracle_moments(const EnsembleSpec& spec);

/// Brute-force oracle: N! det[ fullline_moment(w, j, k, theta) ]_{j,k=1..N}.
SignedLogReal z_oracle_fullline(const EnsembleSpec& spec);

}  // namespace mb
