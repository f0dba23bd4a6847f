#pragma once

#include <vector>

#include "mb/norms.hpp"
#include "mb/signed_log.hpp"
#include "mb/weights.hpp"

namespace mb {

/// Monic polynomial in one variable, constant term first.
struct MonicPoly {
  std::vector<double> coeffs;  // degree+1 entries, coeffs.back() == 1

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  double eval(double x) const {
    double s = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) s = s * x + coeffs[i];
    return s;
  }
};

enum class Side { p, q };

/// Biorthogonal norms h_0 .. h_{K-1} for one (weight, theta).
struct NormSequence {
  WeightSpec weight;
  double theta = 1.0;
  std::vector<SignedLogReal> values;
};

/// h_k as the normalisation ratio Z_{k+1} / ((k+1) Z_k) -- the ground
/// truth used everywhere downstream.  Works for all six weight families
/// (full-line via the parity factorisation inside z_mb_fullline).
SignedLogReal h_k(const WeightSpec& w, double theta, int k);

/// The printed closed forms for h_k (half-line families).  h^L and h^Jp
/// agree with the Z-ratio; the printed h^J is short by exactly the factor
/// (k + (k+a+b+1)/theta) -- kept verbatim for the erratum diagnostics.
SignedLogReal h_k_printed(const WeightSpec& w, double theta, int k);

struct HkDiagnostic {
  SignedLogReal z_ratio;
  SignedLogReal printed;
  double rel_discrepancy;  // |printed - z_ratio| / z_ratio
};
HkDiagnostic h_k_diagnostic(const WeightSpec& w, double theta, int k);

/// h_0 .. h_{kmax-1}.
NormSequence norm_sequence(const WeightSpec& w, double theta, int kmax);

/// q_k: single-sum coefficient formulas for the three half-line weights.
MonicPoly q_poly(const WeightSpec& w, int k, double theta);

/// Families of the gamma-parametrised averaged characteristic polynomials.
struct PGammaFamily {
  enum class Kind { laguerre, jacobi, jacobi_prime } kind;
  double param = 0.0;  // unused | alpha2 | beta

  static PGammaFamily Laguerre() { return {Kind::laguerre, 0.0}; }
  static PGammaFamily Jacobi(double alpha2) { return {Kind::jacobi, alpha2}; }
  static PGammaFamily JacobiPrime(double beta) { return {Kind::jacobi_prime, beta}; }
};

/// Averaged characteristic polynomial of the gamma-parametrised density
/// with N = k.  Laguerre assembles the double sum directly in the monomial
/// basis; Jacobi / Jacobi-prime assemble in the mixed basis
/// (x/(1 -+ x))^nu (1 -+ x)^k and expand binomially.  The result is
/// asserted monic to 1e-10 and then normalised exactly.
MonicPoly p_poly_gamma(const PGammaFamily& family, const ExponentVector& gammas, int k);

/// p_k for the Muttalib-Borodin weights: p_poly_gamma specialised at
/// gamma_j = theta(j-1) + a (Laguerre/Jacobi) or theta(j-1) + alpha (prime).
MonicPoly p_poly(const WeightSpec& w, int k, double theta);

/// Heine-formula oracle: coefficient of x^nu is (-1)^{k-nu} E[e_{k-nu}],
/// with the expectation evaluated as a sum of column- (side q) or row-
/// (side p) shifted moment determinants over the Andreief base matrix.
/// k <= 6 (combinatorial subset sums).
MonicPoly oracle_char_poly(Side side, const WeightSpec& w, int k, double theta);

/// F_nu for the Laguerre multi-parameter density:
///   sum_{s=0}^{nu} (-1)^{nu-s} / ((nu-s)! s!) prod_l (gamma_l + s + 1).
double f_nu_laguerre(int nu, const ExponentVector& gammas);

/// Companion brute force: the subset sum of normalisation ratios
/// C_N^{gamma^l} / C_N^{gamma} over (N-nu)-subsets.
double f_nu_laguerre_bruteforce(int nu, const ExponentVector& gammas);

/// Full-line polynomials via parity: even k = 2m gives r_m(x^2) with the
/// even-reduced weight, odd k = 2m+1 gives x r_m(x^2) with the odd-reduced
/// weight, r = q_poly or p_poly.
MonicPoly parity_lift(Side side, const WeightSpec& w, int k, double theta);

/// Classical monic orthogonal polynomials (three-term recurrence) on the
/// library's supports: Laguerre on (0,inf), Jacobi on (0,1).  The theta=1
/// reduction oracle.
MonicPoly reference_classical(const WeightSpec& w, int k);

}  // namespace mb
