#pragma once

#include <functional>
#include <vector>

#include "mb/weights.hpp"

namespace mb {

enum class Support { unit01, halfline, realline, sym11 };

/// Nodes and positive weights of a Gauss rule with the target weight
/// function absorbed: sum_i weights[i] f(nodes[i]) ~ \int w(x) f(x) dx.
/// Nodes lie strictly inside the open support.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  Support target_support = Support::halfline;
  int exactness_degree = 0;  // polynomial degree integrated exactly (rule variable)

  double apply(const std::function<double(double)>& f) const;
};

/// Monic three-term recurrence x pi_k = pi_{k+1} + alpha_k pi_k + beta_k pi_{k-1}
/// for the classical weights; shared by the Gauss rules and the classical
/// reference polynomials.
struct RecurrenceCoeffs {
  std::vector<double> alpha;  // alpha_0 .. alpha_{n-1}
  std::vector<double> beta;   // beta_1 .. beta_{n-1} (beta[0] unused slot = 0)
  double mu0 = 0.0;           // zeroth moment of the weight
};

/// Weight x^a e^{-x} on (0, inf).
RecurrenceCoeffs laguerre_recurrence(double a, int n);
/// Weight x^a (1-x)^b on (0, 1).
RecurrenceCoeffs jacobi01_recurrence(double a, double b, int n);

/// Gauss rule from a monic recurrence via the Golub-Welsch symmetric
/// tridiagonal eigenproblem.
QuadratureRule gauss_from_recurrence(const RecurrenceCoeffs& rc, Support support);

QuadratureRule gauss_laguerre(double a, int n);
QuadratureRule gauss_jacobi01(double a, double b, int n);

/// Gauss rule with the given weight absorbed (n <= 4096):
///   Laguerre/Jacobi   classical rules on their supports
///   JacobiPrime       rational map t/(1-t) composed with Gauss-Jacobi,
///                     nodes on (0, inf)
///   full-line even    symmetric rule +-sqrt(y_i) built from the
///                     even-reduced half-line rule (2n nodes)
QuadratureRule make_quadrature(const WeightSpec& w, int n);

struct AdaptiveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// \int w(x) f(x) dx by node-doubling Gauss rules (64 -> max_nodes) until two
/// successive values agree to rel_tol.  Throws AdaptiveError on
/// non-convergence.
double integrate_weighted(const WeightSpec& w, const std::function<double(double)>& f,
                          double rel_tol, int max_nodes = 4096);

}  // namespace mb
