#pragma once

#include <span>
#include <vector>

#include "mb/biortho.hpp"
#include "mb/quadrature.hpp"
#include "mb/weights.hpp"

namespace mb {

/// Assembled correlation kernel K_N(x, y) = sum_{k<N} p_k(x) q_k(y^theta) / h_k
/// (full-line weights carry the sign-extended pairing sgn(y)^k q_k(|y|^theta)).
struct KernelSpec {
  EnsembleSpec spec;
  std::vector<MonicPoly> polys_p;
  std::vector<MonicPoly> polys_q;
  NormSequence norms;
  std::vector<double> inv_h;  // 1/h_k in linear doubles
};

KernelSpec build_kernel(const EnsembleSpec& spec);

/// Bare kernel value (no weight factors).
double kernel_eval(const KernelSpec& k, double x, double y);

/// sqrt(w(x) w(y)) K(x, y); its diagonal is the plot-ready 1-point density.
double kernel_eval_weighted(const KernelSpec& k, double x, double y);

/// R_n = det[K(x_i, x_j)] times prod_i w(x_i) (weighted convention; the bare
/// determinant is correlation_bare).
double correlation(const KernelSpec& k, std::span<const double> points);
double correlation_bare(const KernelSpec& k, std::span<const double> points);

/// \int w(x) K(x, x) dx; equals N by biorthogonality.
double kernel_trace(const KernelSpec& k, double rel_tol = 1e-10);

/// Relative error of the projection identity
/// \int w(y) K(x, y) K(y, z) dy = K(x, z).
double projection_error(const KernelSpec& k, double x, double z, double rel_tol = 1e-9);

/// Max over (j, l) of |G_jl - h_j delta_jl| / h_j where
/// G_jl = \int w(x) p_j(x) q_l(x^theta) dx (full-line weights use the
/// sign-extended pairing).  The Gram matrix is computed by Gauss rules with
/// node counts doubling from 64 to 4096 until two successive passes agree
/// entrywise to tol/10; non-convergence throws AdaptiveError.
double verify_biortho(const WeightSpec& w, double theta, int kmax, double tol);

}  // namespace mb
