#include "mb/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mb {

namespace {

constexpr double kLanczosG = 7.0;

// Godfrey/Pugh 9-term set for g = 7.
constexpr double kLanczosCoeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kLogSqrtTwoPi = 0.91893853320467274178032973640562;

// Series valid for x >= 0.5; callers shift smaller arguments up first.
double log_gamma_lanczos(double x) {
  double z = x - 1.0;
  double sum = kLanczosCoeff[0];
  for (int i = 1; i < 9; ++i) sum += kLanczosCoeff[i] / (z + i);
  double t = z + kLanczosG + 0.5;
  return kLogSqrtTwoPi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// log|sin(pi x)| and the sign of sin(pi x), with exact argument reduction.
void log_abs_sin_pi(double x, double& log_abs, int& sign) {
  double m = std::nearbyint(x);
  double r = x - m;  // |r| <= 0.5, exact for moderate x
  double s = std::sin(M_PI * r);
  if (static_cast<long long>(m) % 2 != 0) s = -s;
  if (s == 0.0) throw std::domain_error("specfun: sin(pi x) vanished at a gamma pole");
  sign = s > 0 ? +1 : -1;
  log_abs = std::log(std::fabs(s));
}

}  // namespace

bool near_nonpositive_integer(double x) {
  if (x > 0.5) return false;
  return std::fabs(x - std::nearbyint(x)) <= kPoleTolerance;
}

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error("log_gamma: argument must be a finite positive real, got " + std::to_string(x));
  if (x >= 0.5) return log_gamma_lanczos(x);
  // Gamma(x) = Gamma(x+1) / x
  return log_gamma_lanczos(x + 1.0) - std::log(x);
}

SignedLogReal gamma_signed(double x) {
  if (!std::isfinite(x)) throw std::domain_error("gamma_signed: non-finite argument");
  if (near_nonpositive_integer(x))
    throw std::domain_error("gamma_signed: argument " + std::to_string(x) + " is at a gamma pole");
  if (x > 0.0) return SignedLogReal::from_log(+1, log_gamma(x));
  // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)); 1 - x > 1 here.
  double log_abs_s;
  int sign_s;
  log_abs_sin_pi(x, log_abs_s, sign_s);
  double lm = std::log(M_PI) - log_abs_s - log_gamma(1.0 - x);
  return SignedLogReal::from_log(sign_s, lm);
}

SignedLogReal gamma_ratio(std::span<const double> numerators,
                          std::span<const double> denominators) {
  for (double d : denominators) {
    if (!std::isfinite(d)) throw std::domain_error("gamma_ratio: non-finite denominator argument");
    if (near_nonpositive_integer(d)) return SignedLogReal::zero();
  }
  SignedLogReal r = SignedLogReal::one();
  for (double n : numerators) r *= gamma_signed(n);
  for (double d : denominators) r /= gamma_signed(d);
  return r;
}

SignedLogReal gen_pochhammer(const GenPochhammerArgs& args) {
  const std::size_t n = args.lambda.size();
  SignedLogReal r = SignedLogReal::one();
  for (std::size_t k = 0; k < n; ++k) {
    double base = args.a - static_cast<double>(k) * args.gamma_step;
    if (args.lambda[k] == 0) continue;  // Gamma(base + 0) / Gamma(base) = 1 even near poles
    double num = base + args.lambda[k];
    if (near_nonpositive_integer(num) || near_nonpositive_integer(base))
      throw std::domain_error("gen_pochhammer: gamma pole at shift index " + std::to_string(k + 1));
    r *= gamma_signed(num) / gamma_signed(base);
  }
  return r;
}

}  // namespace mb
