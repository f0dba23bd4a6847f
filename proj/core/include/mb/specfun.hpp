#pragma once

#include <span>
#include <vector>

#include "mb/partition.hpp"
#include "mb/signed_log.hpp"

namespace mb {

/// Arguments within this distance of a non-positive integer are treated
/// as gamma poles.  The closed forms of the library place parameters
/// away from poles; near-pole use is a caller error.
inline constexpr double kPoleTolerance = 1e-9;

bool near_nonpositive_integer(double x);

/// ln Gamma(x) for x > 0.
///
/// Lanczos approximation, g = 7 with the 9-term coefficient set of
/// Godfrey/Pugh (the set popularised by the GNU Scientific Library and
/// Numerical Recipes derivatives).  Accuracy: the relative error of
/// exp(log_gamma(x)) stays below 1e-13 throughout (0, 1e6); equivalently
/// the absolute error of the returned log.  Negative arguments are not
/// accepted here; sign-aware ratios go through gamma_ratio().
double log_gamma(double x);

/// Gamma(x) as a SignedLogReal for any non-pole real x.
/// Negative non-integer arguments use the reflection formula
/// Gamma(x) Gamma(1-x) = pi / sin(pi x), so the sign is exact.
SignedLogReal gamma_signed(double x);

/// prod Gamma(num_i) / prod Gamma(den_j).
///
/// A pole among the numerator arguments is a domain error; a pole among
/// the denominator arguments makes the ratio an exact zero.
SignedLogReal gamma_ratio(std::span<const double> numerators,
                          std::span<const double> denominators);

struct GenPochhammerArgs {
  double a = 0;
  double gamma_step = 0;  // the step of the generalised symbol
  Partition lambda;
};

/// Generalised Pochhammer symbol
///   prod_{k=1}^{N} Gamma(a - (k-1) step + lambda_k) / Gamma(a - (k-1) step),
/// N = number of parts of lambda (trailing zeros included).
SignedLogReal gen_pochhammer(const GenPochhammerArgs& args);

}  // namespace mb
