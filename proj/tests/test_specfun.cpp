#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "mb/specfun.hpp"

using namespace mb;

namespace {
double rel(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
}  // namespace

TEST_CASE("log_gamma matches high-precision references") {
  // Reference values computed with mpmath at 40 digits.  The accuracy
  // contract is relative error of Gamma, i.e. absolute error of the log.
  struct Ref {
    double x, lg;
  };
  const Ref refs[] = {
      {0.03, 3.489971043442411916709298},
      {0.25, 1.28802252469807745737061},
      {0.5, 0.5723649429247000870717137},
      {0.9, 0.06637623973474297118871674},
      {1.0, 0.0},
      {1.5, -0.1207822376352452223455184},
      {2.0, 0.0},
      {3.7, 1.428072326665387921872381},
      {6.0, 4.787491742782045994247701},
      {12.345, 18.35014698029319797690335},
      {47.25, 133.9131137469892733849302},
      {200.5, 860.5822035097824919409268},
      {1234.5, 7550.550901077894895729836},
      {98765.4321, 1037081.879316588665410886},
      {1000000.0, 12815504.56914761165997697},
      {5e-3, 5.295451799982127881210414},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.x);
    CHECK(std::fabs(log_gamma(r.x) - r.lg) <= 1e-13 * std::max(1.0, std::fabs(r.lg)));
  }
}

TEST_CASE("log_gamma examples") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(rel(log_gamma(0.5), 0.57236494292470008) < 1e-14);
  CHECK(rel(log_gamma(6.0), std::log(120.0)) < 1e-14);
}

TEST_CASE("log_gamma domain errors") {
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
  CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("gamma recurrence invariant on (0.5, 200)") {
  for (double x = 0.5001; x < 200.0; x += 0.7919) {
    CAPTURE(x);
    CHECK(rel(std::exp(log_gamma(x + 1.0) - log_gamma(x)), x) < 1e-12);
  }
}

TEST_CASE("gamma_signed negative arguments via reflection") {
  // Gamma(-1/2) = -2 sqrt(pi)
  SignedLogReal g = gamma_signed(-0.5);
  CHECK(g.sign() == -1);
  CHECK(rel(std::exp(g.logmag()), 2.0 * std::sqrt(M_PI)) < 1e-13);
  // mpmath: Gamma(-2.75) = -1.004497983230312, Gamma(-7.3) = +4.183878730135477e-4
  SignedLogReal a = gamma_signed(-2.75);
  CHECK(a.sign() == -1);
  CHECK(std::fabs(a.logmag() - 0.004487897535955773) < 1e-13);
  SignedLogReal b = gamma_signed(-7.3);
  CHECK(b.sign() == +1);
  CHECK(std::fabs(b.logmag() - (-7.779101629826852)) < 1e-12);
}

TEST_CASE("gamma_ratio examples") {
  const std::array<double, 1> n5 = {5.0}, d3 = {3.0};
  SignedLogReal r = gamma_ratio(n5, d3);
  CHECK(r.sign() == 1);
  CHECK(rel(r.to_real(), 12.0) < 1e-13);

  const std::array<double, 1> nm = {-0.5}, dp = {0.5};
  SignedLogReal m = gamma_ratio(nm, dp);
  CHECK(m.sign() == -1);
  CHECK(rel(std::exp(m.logmag()), 2.0) < 1e-13);

  const std::array<double, 2> n22 = {2.0, 2.0};
  const std::array<double, 1> d4 = {4.0};
  SignedLogReal beta = gamma_ratio(n22, d4);
  CHECK(rel(beta.to_real(), 1.0 / 6.0) < 1e-13);
}

TEST_CASE("gamma_ratio pole handling") {
  const std::array<double, 1> pole = {-3.0}, fine = {2.5};
  CHECK_THROWS_AS(gamma_ratio(pole, fine), std::domain_error);
  SignedLogReal z = gamma_ratio(fine, pole);
  CHECK(z.is_zero());
  // near-pole within 1e-9 counts as a pole
  const std::array<double, 1> near = {-2.0 + 5e-10};
  CHECK_THROWS_AS(gamma_ratio(near, fine), std::domain_error);
  CHECK(gamma_ratio(fine, near).is_zero());
}

TEST_CASE("gamma_ratio inverse-product invariant") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-8.0, 12.0);
  int done = 0;
  while (done < 40) {
    double a = u(rng), b = u(rng);
    if (near_nonpositive_integer(a) || near_nonpositive_integer(b)) continue;
    const std::array<double, 1> A = {a}, B = {b};
    SignedLogReal fwd = gamma_ratio(A, B);
    SignedLogReal bwd = gamma_ratio(B, A);
    SignedLogReal prod = fwd * bwd;
    CHECK(prod.sign() == 1);
    CHECK(std::fabs(prod.logmag()) < 1e-12);
    ++done;
  }
}

TEST_CASE("gen_pochhammer examples") {
  CHECK(rel(gen_pochhammer({7.0, 2.0, Partition{0, 0, 0}}).to_real(), 1.0) < 1e-14);
  CHECK(rel(gen_pochhammer({3.0, 0.37, Partition{1}}).to_real(), 3.0) < 1e-13);
  // a=3, step=1, lambda=(2,1): Gamma(5)/Gamma(3) * Gamma(3)/Gamma(2) = 12 * 2
  CHECK(rel(gen_pochhammer({3.0, 1.0, Partition{2, 1}}).to_real(), 24.0) < 1e-13);
}

TEST_CASE("gen_pochhammer with zero step equals rising factorials") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.2, 6.0);
  const Partition lams[] = {{1}, {2, 1}, {3, 2, 1}, {4, 3, 2, 1}, {2, 2, 2, 2, 2}, {5, 3, 1, 1}};
  for (const Partition& lam : lams) {
    double a = u(rng);
    double direct = 1.0;
    for (std::size_t k = 0; k < lam.size(); ++k)
      for (int i = 0; i < lam[k]; ++i) direct *= a + i;
    CHECK(rel(gen_pochhammer({a, 0.0, lam}).to_real(), direct) < 1e-12);
  }
}

TEST_CASE("gen_pochhammer pole") {
  CHECK_THROWS_AS(gen_pochhammer({-1.0, 0.0, Partition{2}}), std::domain_error);
}

TEST_CASE("SignedLogReal round-trip and arithmetic") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> mag(-700.0, 700.0);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 200; ++i) {
    double v = (coin(rng) ? 1.0 : -1.0) * std::exp(mag(rng));
    SignedLogReal s = SignedLogReal::from_real(v);
    CHECK(rel(s.to_real(), v) < 1e-14);
  }
  CHECK(SignedLogReal::from_real(0.0).is_zero());
  CHECK(SignedLogReal::from_real(0.0).to_real() == 0.0);

  SignedLogReal a = SignedLogReal::from_real(3.0), b = SignedLogReal::from_real(-4.0);
  CHECK(rel((a * b).to_real(), -12.0) < 1e-14);
  CHECK(rel((a / b).to_real(), -0.75) < 1e-14);
  CHECK(rel((a + b).to_real(), -1.0) < 1e-13);
  CHECK(rel((a - b).to_real(), 7.0) < 1e-13);
  CHECK((a - a).is_zero());
  CHECK(rel(b.pow(2.0).to_real(), 16.0) < 1e-13);
  CHECK_THROWS_AS(b.pow(0.5), std::domain_error);
}

TEST_CASE("LogSum compensated alternating sums") {
  LogSum s;
  s.add(SignedLogReal::from_real(1e12));
  s.add(SignedLogReal::from_real(-1e12));
  s.add(SignedLogReal::from_real(2.5));
  CHECK(rel(s.total().to_real(), 2.5) < 1e-12);
}
