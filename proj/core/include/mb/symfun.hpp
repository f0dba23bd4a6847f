#pragma once

#include <span>
#include <vector>

#include "mb/partition.hpp"
#include "mb/signed_log.hpp"

namespace mb {

/// Evaluation points x_1, ..., x_N.
using PointVector = std::vector<double>;

/// prod_{i<j} (x_i - x_j).
double vandermonde(std::span<const double> x);

/// e_nu(x_1, ..., x_N) via the stable Newton triangle recurrence.
double elementary_symmetric(int nu, std::span<const double> x);

/// Schur polynomial s_lambda(x) as the bialternant ratio
/// det[x_j^{N-i+lambda_i}] / det[x_j^{N-i}], both determinants by LU with
/// partial pivoting.  Points must be pairwise distinct (min gap 1e-8);
/// the coincident specialisation (1)^N has schur_at_ones.
double schur_eval(const Partition& lambda, std::span<const double> x);

/// s_lambda((1)^N) = prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
SignedLogReal schur_at_ones(const Partition& lambda, int n);

/// The partition mu^(j) with parts
///   (theta-1)(k-l) + theta  for l <= j,
///   (theta-1)(k-l)          for l >  j,     l = 1..k.
/// theta must be a positive integer (within 1e-9).
Partition mu_partition(double theta, int k, int j);

}  // namespace mb
