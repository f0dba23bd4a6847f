#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "mb/biortho.hpp"
#include "mb/norms.hpp"
#include "mb/specfun.hpp"

using namespace mb;

namespace {

double rel(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

double coeffwise_rel(const MonicPoly& a, const MonicPoly& b) {
  REQUIRE(a.coeffs.size() == b.coeffs.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    double scale = std::max({std::fabs(a.coeffs[i]), std::fabs(b.coeffs[i]), 1e-300});
    worst = std::max(worst, std::fabs(a.coeffs[i] - b.coeffs[i]) / scale);
  }
  return worst;
}

// The displayed p_k closed forms with the Gamma((a+s+1)/theta)-ratio inner
// products, evaluated independently of the p_poly_gamma assembly path.  The
// integer-offset Gamma ratios are rising factorials, so the displayed
// u = (a+s+1)/theta structure can be evaluated exactly in extended precision.
MonicPoly p_poly_displayed(const WeightSpec& w, int k, double theta) {
  auto rising = [](long double u, int m) {
    long double r = 1.0L;
    for (int i = 0; i < m; ++i) r *= u + i;
    return r;
  };
  auto inner = [&](double a, int nu) {
    long double s = 0.0L;
    for (int t = 0; t <= nu; ++t) {
      long double fac = 1.0L;
      for (int i = 2; i <= nu - t; ++i) fac *= i;
      for (int i = 2; i <= t; ++i) fac *= i;
      long double u = (static_cast<long double>(a) + t + 1.0L) / theta;
      long double term = rising(u, k) / fac;  // Gamma(k+u)/Gamma(u)
      s += ((k - t) % 2 == 0) ? term : -term;
    }
    return s;
  };
  std::vector<long double> c(static_cast<std::size_t>(k) + 1, 0.0L);
  auto binom = [](int n, int r) {
    long double v = 1.0L;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
  };
  switch (w.family) {
    case WeightFamily::laguerre: {
      long double pref = std::pow(static_cast<long double>(theta), k);
      for (int nu = 0; nu <= k; ++nu) c[nu] = pref * inner(w.p1, nu);
      break;
    }
    case WeightFamily::jacobi: {
      const double a = w.p1, b = w.p2;
      long double v = (static_cast<long double>(a) + b + k + 1.0L) / theta;
      for (int nu = 0; nu <= k; ++nu) {
        long double outer = rising(static_cast<long double>(k - nu) + b + 1.0L, nu);
        long double base = outer * inner(a, nu) / rising(v, k);
        for (int t = 0; t <= k - nu; ++t) {
          long double term = base * binom(k - nu, t);
          c[static_cast<std::size_t>(nu + t)] += (t % 2 == 0) ? term : -term;
        }
      }
      break;
    }
    case WeightFamily::jacobi_prime: {
      const double al = w.p1, be = w.p2;
      long double u = (static_cast<long double>(be) - k - al - 1.0L) / theta;
      // Gamma(u-k+1)/Gamma(u+1) = 1 / prod_{i=0}^{k-1} (u - i)
      long double fall = 1.0L;
      for (int i = 0; i < k; ++i) fall *= u - i;
      for (int nu = 0; nu <= k; ++nu) {
        long double outer = rising(static_cast<long double>(be) - k, nu);
        long double base = outer * inner(al, nu) / fall;
        for (int t = 0; t <= k - nu; ++t)
          c[static_cast<std::size_t>(nu + t)] += base * binom(k - nu, t);
      }
      break;
    }
    default:
      throw std::logic_error("p_poly_displayed: half-line only");
  }
  MonicPoly p;
  p.coeffs.assign(c.begin(), c.end());
  return p;
}

}  // namespace

TEST_CASE("h_k ground truth: k=0 is the weight mass") {
  const WeightSpec ws[] = {WeightSpec::Laguerre(0.7),       WeightSpec::Jacobi(0.4, 1.2),
                           WeightSpec::JacobiPrime(0.5, 8.0), WeightSpec::GenGaussian(0.3),
                           WeightSpec::GenSymJacobi(0.2, 1.0), WeightSpec::GenCauchy(0.1, 6.0)};
  for (const WeightSpec& w : ws) {
    double mass = w.half_line() ? moment(w, 0.0).to_real()
                                : fullline_moment(w, 1, 1, 1.3).to_real();
    CAPTURE(family_name(w.family));
    CHECK(rel(h_k(w, 1.3, 0).to_real(), mass) < 1e-12);
  }
}

TEST_CASE("h_k closed forms vs Z-ratio") {
  // Laguerre printed form is exact
  for (int k = 0; k <= 6; ++k)
    for (double theta : {0.5, 1.0, 2.0}) {
      HkDiagnostic d = h_k_diagnostic(WeightSpec::Laguerre(1.2), theta, k);
      CAPTURE(k);
      CAPTURE(theta);
      CHECK(d.rel_discrepancy < 1e-12);
      // and matches theta^k Gamma(theta k + a + 1) Gamma(k+1)
      double want = std::pow(theta, k) *
                    std::exp(log_gamma(theta * k + 2.2) + log_gamma(k + 1.0));
      CHECK(rel(d.z_ratio.to_real(), want) < 1e-12);
    }
  // Jacobi prime printed form is exact
  for (int k = 0; k <= 5; ++k) {
    HkDiagnostic d = h_k_diagnostic(WeightSpec::JacobiPrime(0.4, 40.0), 2.0, k);
    CHECK(d.rel_discrepancy < 1e-12);
  }
}

TEST_CASE("h_k Jacobi frozen value and the printed-form erratum factor") {
  // Z-ratio value for Jacobi(0.7, 1.4), theta = 2, k = 1 (mpmath):
  CHECK(rel(h_k(WeightSpec::Jacobi(0.7, 1.4), 2.0, 1).to_real(), 6.979814865918712947745799e-3) <
        1e-12);
  for (int k = 1; k <= 6; ++k)
    for (double theta : {0.5, 1.0, 1.5, 2.0}) {
      const double a = 0.7, b = 1.4;
      HkDiagnostic d = h_k_diagnostic(WeightSpec::Jacobi(a, b), theta, k);
      double factor = (k + a + b + 1.0) / theta + k;
      CAPTURE(k);
      CAPTURE(theta);
      CHECK(d.rel_discrepancy > 1e-3);  // genuinely discrepant
      CHECK(rel((d.z_ratio / d.printed).to_real(), factor) < 1e-9);
    }
}

TEST_CASE("q_poly examples") {
  CHECK(q_poly(WeightSpec::Laguerre(0.4), 0, 1.7).coeffs == std::vector<double>{1.0});

  const double a = 0.9, theta = 1.6;
  MonicPoly q1 = q_poly(WeightSpec::Laguerre(a), 1, theta);
  CHECK(rel(-q1.coeffs[0], std::exp(log_gamma(a + theta + 1.0) - log_gamma(a + 1.0))) < 1e-13);

  MonicPoly q2 = q_poly(WeightSpec::Laguerre(0.0), 2, 1.0);
  CHECK(rel(q2.coeffs[0], 2.0) < 1e-12);
  CHECK(rel(q2.coeffs[1], -4.0) < 1e-12);
  CHECK(q2.coeffs[2] == 1.0);
}

TEST_CASE("q_poly k=1 equals the N=1 Heine mean of x^theta") {
  const double theta = 1.3;
  {
    WeightSpec w = WeightSpec::Jacobi(0.6, 1.1);
    double want = (moment(w, theta) / moment(w, 0.0)).to_real();
    CHECK(rel(-q_poly(w, 1, theta).coeffs[0], want) < 1e-12);
  }
  {
    WeightSpec w = WeightSpec::JacobiPrime(0.7, 12.0);
    double want = (moment(w, theta) / moment(w, 0.0)).to_real();
    CHECK(rel(-q_poly(w, 1, theta).coeffs[0], want) < 1e-12);
  }
}

TEST_CASE("q_poly jacobi-prime coefficient pole is a domain error") {
  // needs beta > alpha + (1+theta) k
  CHECK_THROWS_AS(q_poly(WeightSpec::JacobiPrime(0.0, 5.0), 3, 1.0), std::domain_error);
}

TEST_CASE("p_poly_gamma examples") {
  const double a = 1.37;
  MonicPoly p1 = p_poly_gamma(PGammaFamily::Laguerre(), {{a}}, 1);
  CHECK(rel(-p1.coeffs[0], a + 1.0) < 1e-14);
  CHECK(p_poly_gamma(PGammaFamily::Jacobi(1.5), {{}}, 0).coeffs == std::vector<double>{1.0});
}

TEST_CASE("p_poly examples") {
  for (double theta : {0.6, 1.0, 2.0}) {
    MonicPoly p = p_poly(WeightSpec::Laguerre(0.8), 1, theta);
    CAPTURE(theta);
    CHECK(rel(-p.coeffs[0], 1.8) < 1e-13);  // x - (a+1), theta independent
  }
  // Jacobi(0,0), k=2, theta=1 -> monic Legendre on (0,1): x^2 - x + 1/6
  MonicPoly p2 = p_poly(WeightSpec::Jacobi(0.0, 0.0), 2, 1.0);
  MonicPoly ref = reference_classical(WeightSpec::Jacobi(0.0, 0.0), 2);
  CHECK(coeffwise_rel(p2, ref) < 1e-12);
  CHECK(rel(p2.coeffs[0], 1.0 / 6.0) < 1e-12);
  CHECK(rel(-p2.coeffs[1], 1.0) < 1e-12);
  // JacobiPrime(0, 20), k=1: x - 1/(beta-2)
  MonicPoly pj = p_poly(WeightSpec::JacobiPrime(0.0, 20.0), 1, 1.0);
  CHECK(rel(-pj.coeffs[0], 1.0 / 18.0) < 1e-12);
}

TEST_CASE("p_poly agrees with the displayed Gamma-ratio forms to 1e-12") {
  for (int k = 0; k <= 6; ++k)
    for (double theta : {0.5, 1.5, 2.0}) {
      CAPTURE(k);
      CAPTURE(theta);
      CHECK(coeffwise_rel(p_poly(WeightSpec::Laguerre(0.8), k, theta),
                          p_poly_displayed(WeightSpec::Laguerre(0.8), k, theta)) < 1e-12);
      CHECK(coeffwise_rel(p_poly(WeightSpec::Jacobi(0.5, 1.2), k, theta),
                          p_poly_displayed(WeightSpec::Jacobi(0.5, 1.2), k, theta)) < 1e-12);
      CHECK(coeffwise_rel(p_poly(WeightSpec::JacobiPrime(0.4, 35.0), k, theta),
                          p_poly_displayed(WeightSpec::JacobiPrime(0.4, 35.0), k, theta)) < 1e-12);
    }
}

TEST_CASE("oracle_char_poly matches k=1 and the Laguerre frozen case") {
  WeightSpec w = WeightSpec::Jacobi(0.7, 0.9);
  const double theta = 1.4;
  CHECK(coeffwise_rel(oracle_char_poly(Side::q, w, 1, theta), q_poly(w, 1, theta)) < 1e-12);
  CHECK(coeffwise_rel(oracle_char_poly(Side::p, w, 1, theta), p_poly(w, 1, theta)) < 1e-12);

  MonicPoly oq = oracle_char_poly(Side::q, WeightSpec::Laguerre(0.0), 2, 1.0);
  CHECK(rel(oq.coeffs[0], 2.0) < 1e-11);
  CHECK(rel(oq.coeffs[1], -4.0) < 1e-11);
}

TEST_CASE("Heine equivalence: closed forms equal subset-determinant oracle") {
  const double thetas[] = {0.5, 1.0, 2.0};
  for (double theta : thetas)
    for (int k = 0; k <= 5; ++k) {
      CAPTURE(theta);
      CAPTURE(k);
      {
        WeightSpec w = WeightSpec::Laguerre(1.1);
        CHECK(coeffwise_rel(q_poly(w, k, theta), oracle_char_poly(Side::q, w, k, theta)) < 1e-9);
        CHECK(coeffwise_rel(p_poly(w, k, theta), oracle_char_poly(Side::p, w, k, theta)) < 1e-9);
      }
      {
        WeightSpec w = WeightSpec::Jacobi(0.5, 1.5);
        CHECK(coeffwise_rel(q_poly(w, k, theta), oracle_char_poly(Side::q, w, k, theta)) < 1e-9);
        CHECK(coeffwise_rel(p_poly(w, k, theta), oracle_char_poly(Side::p, w, k, theta)) < 1e-9);
      }
      {
        WeightSpec w = WeightSpec::JacobiPrime(0.5, 40.0);
        CHECK(coeffwise_rel(q_poly(w, k, theta), oracle_char_poly(Side::q, w, k, theta)) < 1e-9);
        CHECK(coeffwise_rel(p_poly(w, k, theta), oracle_char_poly(Side::p, w, k, theta)) < 1e-9);
      }
    }
}

TEST_CASE("f_nu_laguerre closed form, brute force, recurrence") {
  // nu = 0 initial condition
  ExponentVector g{{0.3, 1.9, 4.4}};
  CHECK(rel(f_nu_laguerre(0, g), 1.3 * 2.9 * 5.4) < 1e-14);
  // N=1, nu=1: single empty-subset ratio
  CHECK(rel(f_nu_laguerre(1, ExponentVector{{2.8}}), 1.0) < 1e-13);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int n = 2; n <= 7; ++n) {
    ExponentVector gv;
    for (int l = 0; l < n; ++l) gv.gammas.push_back(u(rng) + 1.7 * l);
    for (int nu = 0; nu <= n; ++nu) {
      CAPTURE(n);
      CAPTURE(nu);
      CHECK(rel(f_nu_laguerre(nu, gv), f_nu_laguerre_bruteforce(nu, gv)) < 1e-11);
    }
  }

  // recurrence at gamma_1 = -1: F_nu({-1, g_2..g_N}) = F_{nu-1}({g_l + 1}_{l>=2})
  for (int n = 2; n <= 6; ++n) {
    ExponentVector full, shifted;
    full.gammas.push_back(-1.0);
    for (int l = 1; l < n; ++l) {
      double v = 0.37 + 1.23 * l;
      full.gammas.push_back(v);
      shifted.gammas.push_back(v + 1.0);
    }
    for (int nu = 1; nu <= n; ++nu) {
      double lhs = f_nu_laguerre(nu, full);
      double rhs = f_nu_laguerre(nu - 1, shifted);
      CAPTURE(n);
      CAPTURE(nu);
      CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(rhs)));
    }
  }
}

TEST_CASE("parity_lift") {
  CHECK(parity_lift(Side::q, WeightSpec::GenGaussian(0.4), 0, 1.7).coeffs ==
        std::vector<double>{1.0});
  MonicPoly l1 = parity_lift(Side::q, WeightSpec::GenGaussian(0.4), 1, 1.7);
  CHECK(l1.coeffs == std::vector<double>{0.0, 1.0});
  // k=2, GenGaussian(0), theta=1, side q -> x^2 - 1/2
  MonicPoly l2 = parity_lift(Side::q, WeightSpec::GenGaussian(0.0), 2, 1.0);
  CHECK(rel(-l2.coeffs[0], 0.5) < 1e-13);
  CHECK(l2.coeffs[1] == 0.0);
  CHECK(l2.coeffs[2] == 1.0);
}

TEST_CASE("parity-lifted norms match the reduced half-line norms") {
  const WeightSpec fulls[] = {WeightSpec::GenGaussian(0.3), WeightSpec::GenSymJacobi(0.2, 1.1),
                              WeightSpec::GenCauchy(0.1, 40.0)};
  for (const WeightSpec& w : fulls)
    for (double theta : {1.0, 2.0})
      for (int k = 0; k <= 5; ++k) {
        auto [even, odd] = parity_reduce(w, theta);
        SignedLogReal lifted =
            (k % 2 == 0) ? h_k(even, theta, k / 2) : h_k(odd, theta, k / 2);
        CAPTURE(family_name(w.family));
        CAPTURE(theta);
        CAPTURE(k);
        CHECK(rel_diff(h_k(w, theta, k), lifted) < 1e-11);
      }
}

TEST_CASE("reference_classical") {
  MonicPoly l2 = reference_classical(WeightSpec::Laguerre(0.0), 2);
  CHECK(rel(l2.coeffs[0], 2.0) < 1e-14);
  CHECK(rel(l2.coeffs[1], -4.0) < 1e-14);
  MonicPoly j1 = reference_classical(WeightSpec::Jacobi(0.0, 0.0), 1);
  CHECK(rel(-j1.coeffs[0], 0.5) < 1e-14);
  MonicPoly la1 = reference_classical(WeightSpec::Laguerre(1.45), 1);
  CHECK(rel(-la1.coeffs[0], 2.45) < 1e-14);
  CHECK_THROWS_AS(reference_classical(WeightSpec::JacobiPrime(0.0, 9.0), 2), std::domain_error);
}

TEST_CASE("Z-product identity N! prod h_k = Z_N") {
  const WeightSpec ws[] = {WeightSpec::Laguerre(0.9),        WeightSpec::Jacobi(0.4, 1.3),
                           WeightSpec::JacobiPrime(0.3, 45.0), WeightSpec::GenGaussian(0.25),
                           WeightSpec::GenSymJacobi(0.3, 0.8), WeightSpec::GenCauchy(0.2, 50.0)};
  for (const WeightSpec& w : ws)
    for (double theta : {0.5, 1.0, 2.0})
      for (int n = 1; n <= 8; ++n) {
        SignedLogReal prod = SignedLogReal::from_log(+1, log_gamma(n + 1.0));
        for (int k = 0; k < n; ++k) prod *= h_k(w, theta, k);
        CAPTURE(family_name(w.family));
        CAPTURE(theta);
        CAPTURE(n);
        CHECK(rel_diff(prod, z_normalisation({w, n, theta})) < 1e-11);
      }
}

TEST_CASE("theta=1 collapse: p = q = classical, k <= 10") {
  for (int k = 0; k <= 10; ++k) {
    WeightSpec lag = WeightSpec::Laguerre(0.8);
    MonicPoly ref = reference_classical(lag, k);
    CAPTURE(k);
    CHECK(coeffwise_rel(p_poly(lag, k, 1.0), ref) < 1e-10);
    CHECK(coeffwise_rel(q_poly(lag, k, 1.0), ref) < 1e-10);
    WeightSpec jac = WeightSpec::Jacobi(0.3, 1.7);
    MonicPoly refj = reference_classical(jac, k);
    CHECK(coeffwise_rel(p_poly(jac, k, 1.0), refj) < 1e-10);
    CHECK(coeffwise_rel(q_poly(jac, k, 1.0), refj) < 1e-10);
  }
}

TEST_CASE("theta-inversion well-definedness on Laguerre p and q") {
  for (double theta : {1.0 / 3.0, 3.0})
    for (int k = 0; k <= 6; ++k) {
      MonicPoly p = p_poly(WeightSpec::Laguerre(0.6), k, theta);
      MonicPoly q = q_poly(WeightSpec::Laguerre(1.4), k, 1.0 / theta);
      CHECK(p.coeffs.back() == 1.0);
      CHECK(q.coeffs.back() == 1.0);
      for (double c : p.coeffs) CHECK(std::isfinite(c));
      for (double c : q.coeffs) CHECK(std::isfinite(c));
    }
}

TEST_CASE("norm_sequence values are positive") {
  NormSequence s = norm_sequence(WeightSpec::Jacobi(0.5, 0.5), 1.5, 6);
  REQUIRE(s.values.size() == 6);
  for (const SignedLogReal& h : s.values) CHECK(h.sign() == 1);
}
