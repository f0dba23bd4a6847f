#pragma once

#include <string>
#include <utility>

#include "mb/signed_log.hpp"

namespace mb {

/// The six classical weight families.
///
/// Half-line (eigenvalues on R^+ or (0,1)):
///   Laguerre      x^a e^{-x}            on (0, inf)
///   Jacobi        x^a (1-x)^b           on (0, 1)
///   JacobiPrime   x^alpha (1+x)^{-beta} on (0, inf)
/// Full-line even weights:
///   GenGaussian   |x|^{2c} e^{-x^2}         on R
///   GenSymJacobi  |x|^{2c} (1-x^2)^alpha    on (-1, 1)
///   GenCauchy     |x|^{2c} (1+x^2)^{-alpha} on R
enum class WeightFamily {
  laguerre,
  jacobi,
  jacobi_prime,
  gen_gaussian,
  gen_sym_jacobi,
  gen_cauchy,
};

const char* family_name(WeightFamily f);
WeightFamily family_from_name(const std::string& name);

struct WeightSpec {
  WeightFamily family = WeightFamily::laguerre;
  double p1 = 0.0;  // a | a | alpha | c | c | c
  double p2 = 0.0;  // - | b | beta  | - | alpha | alpha

  static WeightSpec Laguerre(double a) { return {WeightFamily::laguerre, a, 0.0}; }
  static WeightSpec Jacobi(double a, double b) { return {WeightFamily::jacobi, a, b}; }
  static WeightSpec JacobiPrime(double alpha, double beta) { return {WeightFamily::jacobi_prime, alpha, beta}; }
  static WeightSpec GenGaussian(double c) { return {WeightFamily::gen_gaussian, c, 0.0}; }
  static WeightSpec GenSymJacobi(double c, double alpha) { return {WeightFamily::gen_sym_jacobi, c, alpha}; }
  static WeightSpec GenCauchy(double c, double alpha) { return {WeightFamily::gen_cauchy, c, alpha}; }

  bool half_line() const {
    return family == WeightFamily::laguerre || family == WeightFamily::jacobi ||
           family == WeightFamily::jacobi_prime;
  }
  bool full_line() const { return !half_line(); }

  /// Open support (lo, hi); infinite endpoints use +-inf.
  std::pair<double, double> support() const;

  /// Single-variable integrability constraints; throws std::domain_error
  /// naming the violated constraint.
  void validate() const;
};

/// One Muttalib-Borodin ensemble: weight, size and deformation parameter.
struct EnsembleSpec {
  WeightSpec weight;
  int n = 1;
  double theta = 1.0;

  /// Ensemble-level constraints (N-dependent Jacobi-prime windows, the
  /// parity-reduced pair for GenCauchy).  Throws std::domain_error naming
  /// the failing Gamma argument.
  void validate() const;
};

/// w(x) per the family table; 0 outside the support.  Divergent finite
/// endpoints (e.g. a < 0 at x = 0) saturate to +inf.
double weight_eval(const WeightSpec& w, double x);

/// Closed-form moment \int w(x) x^p dx of a half-line weight:
///   Laguerre     Gamma(a+p+1)
///   Jacobi       B(a+p+1, b+1)
///   JacobiPrime  B(alpha+p+1, beta-alpha-p-1)
SignedLogReal moment(const WeightSpec& w, double p);

/// Natural log of the same moment in extended precision (lgammal), for the
/// determinant oracles whose Hankel-type matrices amplify entry noise.
long double moment_log_ext(const WeightSpec& w, double p);

/// Split an even full-line weight into its parity-reduced half-line pair
/// (even component x^{-1/2} w(x^{1/2}), odd component x^{theta/2} w(x^{1/2})):
///   GenGaussian(c)       -> (Laguerre(c-1/2),    Laguerre(c+theta/2))
///   GenSymJacobi(c,al)   -> (Jacobi(c-1/2, al),  Jacobi(c+theta/2, al))
///   GenCauchy(c,al)      -> (JacobiPrime(c-1/2, al), JacobiPrime(c+theta/2, al))
std::pair<WeightSpec, WeightSpec> parity_reduce(const WeightSpec& w, double theta);

/// \int_{-inf}^{inf} w(x) |x|^{j-1+theta(k-1)} (sgn x)^{j+k} dx for an even
/// full-line weight; exactly zero when j+k is odd, otherwise the
/// parity-reduced half-line moment after the substitution x^2 = y.
SignedLogReal fullline_moment(const WeightSpec& w, int j, int k, double theta);

}  // namespace mb
