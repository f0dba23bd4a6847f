#include "mb/weights.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mb/specfun.hpp"

namespace mb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void violated(const std::string& what) { throw std::domain_error(what); }

SignedLogReal beta_slr(double p, double q) {
  const std::array<double, 2> num = {p, q};
  const std::array<double, 1> den = {p + q};
  return gamma_ratio(num, den);
}

}  // namespace

const char* family_name(WeightFamily f) {
  switch (f) {
    case WeightFamily::laguerre: return "laguerre";
    case WeightFamily::jacobi: return "jacobi";
    case WeightFamily::jacobi_prime: return "jacobi_prime";
    case WeightFamily::gen_gaussian: return "gen_gaussian";
    case WeightFamily::gen_sym_jacobi: return "gen_sym_jacobi";
    case WeightFamily::gen_cauchy: return "gen_cauchy";
  }
  throw std::logic_error("family_name: unreachable");
}

WeightFamily family_from_name(const std::string& name) {
  if (name == "laguerre") return WeightFamily::laguerre;
  if (name == "jacobi") return WeightFamily::jacobi;
  if (name == "jacobi_prime") return WeightFamily::jacobi_prime;
  if (name == "gen_gaussian") return WeightFamily::gen_gaussian;
  if (name == "gen_sym_jacobi") return WeightFamily::gen_sym_jacobi;
  if (name == "gen_cauchy") return WeightFamily::gen_cauchy;
  throw std::domain_error("unknown weight family '" + name + "'");
}

std::pair<double, double> WeightSpec::support() const {
  switch (family) {
    case WeightFamily::laguerre:
    case WeightFamily::jacobi_prime: return {0.0, kInf};
    case WeightFamily::jacobi: return {0.0, 1.0};
    case WeightFamily::gen_gaussian:
    case WeightFamily::gen_cauchy: return {-kInf, kInf};
    case WeightFamily::gen_sym_jacobi: return {-1.0, 1.0};
  }
  throw std::logic_error("support: unreachable");
}

void WeightSpec::validate() const {
  switch (family) {
    case WeightFamily::laguerre:
      if (!(p1 > -1.0)) violated("Laguerre weight requires a > -1");
      return;
    case WeightFamily::jacobi:
      if (!(p1 > -1.0)) violated("Jacobi weight requires a > -1");
      if (!(p2 > -1.0)) violated("Jacobi weight requires b > -1");
      return;
    case WeightFamily::jacobi_prime:
      if (!(p1 > -1.0)) violated("Jacobi-prime weight requires alpha > -1");
      if (!(p2 > p1 + 1.0)) violated("Jacobi-prime weight requires beta > alpha + 1");
      return;
    case WeightFamily::gen_gaussian:
      if (!(p1 > -0.5)) violated("generalised Gaussian weight requires c > -1/2");
      return;
    case WeightFamily::gen_sym_jacobi:
      if (!(p1 > -0.5)) violated("generalised symmetric Jacobi weight requires c > -1/2");
      if (!(p2 > -1.0)) violated("generalised symmetric Jacobi weight requires alpha > -1");
      return;
    case WeightFamily::gen_cauchy:
      if (!(p1 > -0.5)) violated("generalised Cauchy weight requires c > -1/2");
      if (!(p2 > p1 + 0.5)) violated("generalised Cauchy weight requires alpha > c + 1/2");
      return;
  }
}

void EnsembleSpec::validate() const {
  weight.validate();
  if (n < 1) violated("ensemble size N must be >= 1");
  if (!(theta > 0.0)) violated("deformation parameter theta must be > 0");
  if (weight.family == WeightFamily::jacobi_prime) {
    const double bound = weight.p1 + n + theta * (n - 1);
    if (!(weight.p2 > bound))
      violated("Jacobi-prime ensemble requires beta > alpha + N + theta(N-1) = " +
               std::to_string(bound) + "; Gamma(beta - alpha - N - theta(N-1)) would hit a pole");
  }
  if (weight.family == WeightFamily::gen_cauchy) {
    auto [even, odd] = parity_reduce(weight, theta);
    const int n1 = (n + 1) / 2, n2 = n / 2;
    if (n1 > 0) EnsembleSpec{even, n1, theta}.validate();
    if (n2 > 0) EnsembleSpec{odd, n2, theta}.validate();
  }
}

double weight_eval(const WeightSpec& w, double x) {
  auto [lo, hi] = w.support();
  if (x < lo || x > hi) return 0.0;
  switch (w.family) {
    case WeightFamily::laguerre:
      if (x == 0.0) return w.p1 > 0 ? 0.0 : (w.p1 == 0.0 ? 1.0 : kInf);
      return std::pow(x, w.p1) * std::exp(-x);
    case WeightFamily::jacobi: {
      if (x == 0.0) return w.p1 > 0 ? 0.0 : (w.p1 == 0.0 ? 1.0 : kInf);
      if (x == 1.0) return w.p2 > 0 ? 0.0 : (w.p2 == 0.0 ? 1.0 : kInf);
      return std::pow(x, w.p1) * std::pow(1.0 - x, w.p2);
    }
    case WeightFamily::jacobi_prime:
      if (x == 0.0) return w.p1 > 0 ? 0.0 : (w.p1 == 0.0 ? 1.0 : kInf);
      return std::pow(x, w.p1) * std::pow(1.0 + x, -w.p2);
    case WeightFamily::gen_gaussian:
      if (x == 0.0) return w.p1 > 0 ? 0.0 : (w.p1 == 0.0 ? 1.0 : kInf);
      return std::pow(std::fabs(x), 2.0 * w.p1) * std::exp(-x * x);
    case WeightFamily::gen_sym_jacobi: {
      if (x == 0.0) return w.p1 > 0 ? 0.0 : (w.p1 == 0.0 ? 1.0 : kInf);
      if (std::fabs(x) == 1.0) return w.p2 > 0 ? 0.0 : (w.p2 == 0.0 ? 1.0 : kInf);
      return std::pow(std::fabs(x), 2.0 * w.p1) * std::pow(1.0 - x * x, w.p2);
    }
    case WeightFamily::gen_cauchy:
      if (x == 0.0) return w.p1 > 0 ? 0.0 : (w.p1 == 0.0 ? 1.0 : kInf);
      return std::pow(std::fabs(x), 2.0 * w.p1) * std::pow(1.0 + x * x, -w.p2);
  }
  throw std::logic_error("weight_eval: unreachable");
}

SignedLogReal moment(const WeightSpec& w, double p) {
  w.validate();
  switch (w.family) {
    case WeightFamily::laguerre: {
      if (!(w.p1 + p > -1.0)) violated("Laguerre moment requires a + p > -1");
      return SignedLogReal::from_log(+1, log_gamma(w.p1 + p + 1.0));
    }
    case WeightFamily::jacobi: {
      if (!(w.p1 + p > -1.0)) violated("Jacobi moment requires a + p > -1");
      return beta_slr(w.p1 + p + 1.0, w.p2 + 1.0);
    }
    case WeightFamily::jacobi_prime: {
      if (!(w.p1 + p > -1.0)) violated("Jacobi-prime moment requires alpha + p > -1");
      if (!(w.p2 - w.p1 - p - 1.0 > 0.0))
        violated("Jacobi-prime moment requires beta - alpha - p - 1 > 0");
      return beta_slr(w.p1 + p + 1.0, w.p2 - w.p1 - p - 1.0);
    }
    default:
      violated("moment: weight must be a half-line family; use fullline_moment");
  }
}

long double moment_log_ext(const WeightSpec& w, double p) {
  moment(w, p);  // run the full validation and error paths
  switch (w.family) {
    case WeightFamily::laguerre:
      return lgammal(static_cast<long double>(w.p1) + p + 1.0L);
    case WeightFamily::jacobi:
      return lgammal(static_cast<long double>(w.p1) + p + 1.0L) +
             lgammal(static_cast<long double>(w.p2) + 1.0L) -
             lgammal(static_cast<long double>(w.p1) + p + w.p2 + 2.0L);
    case WeightFamily::jacobi_prime:
      return lgammal(static_cast<long double>(w.p1) + p + 1.0L) +
             lgammal(static_cast<long double>(w.p2) - w.p1 - p - 1.0L) -
             lgammal(static_cast<long double>(w.p2));
    default:
      violated("moment_log_ext: weight must be a half-line family");
  }
}

std::pair<WeightSpec, WeightSpec> parity_reduce(const WeightSpec& w, double theta) {
  if (!w.full_line()) violated("parity_reduce: weight must be a full-line family");
  const double c = w.p1;
  switch (w.family) {
    case WeightFamily::gen_gaussian:
      return {WeightSpec::Laguerre(c - 0.5), WeightSpec::Laguerre(c + theta / 2.0)};
    case WeightFamily::gen_sym_jacobi:
      return {WeightSpec::Jacobi(c - 0.5, w.p2), WeightSpec::Jacobi(c + theta / 2.0, w.p2)};
    case WeightFamily::gen_cauchy:
      return {WeightSpec::JacobiPrime(c - 0.5, w.p2), WeightSpec::JacobiPrime(c + theta / 2.0, w.p2)};
    default:
      throw std::logic_error("parity_reduce: unreachable");
  }
}

SignedLogReal fullline_moment(const WeightSpec& w, int j, int k, double theta) {
  if (!w.full_line()) violated("fullline_moment: weight must be a full-line family");
  if (j < 1 || k < 1) violated("fullline_moment: indices must be >= 1");
  if ((j + k) % 2 != 0) return SignedLogReal::zero();  // odd integrand
  const double p = (j - 1) + theta * (k - 1);
  // 2 \int_0^inf w(x) x^p dx = \int_0^inf y^{(p-1)/2} w(y^{1/2}) dy
  //                          = moment(even-reduced weight, p/2).
  auto [even, odd] = parity_reduce(w, theta);
  (void)odd;
  return moment(even, p / 2.0);
}

}  // namespace mb
