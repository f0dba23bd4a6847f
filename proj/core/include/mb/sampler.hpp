#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mb/weights.hpp"

namespace mb {

/// Log of the unnormalised joint density:
///   sum_{i<j} log|x_j - x_i| + sum_{i<j} log|sgn(x_j)|x_j|^theta - sgn(x_i)|x_i|^theta|
///   + sum_k log w(x_k);
/// -inf at coincident points or outside the open support.
double log_target(const EnsembleSpec& spec, std::span<const double> positions);

/// Walker state: positions inside the open support, the cached log target
/// (consistent with the positions to 1e-9 on recompute), the seedable RNG
/// and the proposal scale.
struct ChainState {
  std::vector<double> positions;
  double log_density = 0.0;
  std::mt19937_64 rng;
  double step_scale = 0.0;
};

struct ChainResult {
  std::vector<std::vector<double>> samples;  // post burn-in, one row per sweep
  double acceptance_rate = 0.0;              // post burn-in
  double step_scale = 0.0;                   // frozen after tuning
  ChainState final_state;
};

/// Single-site Metropolis with Gaussian proposals reflected into the
/// support.  One step is one sweep over all N coordinates.  step_scale is
/// auto-tuned during burn-in toward acceptance in [0.3, 0.5] and then
/// frozen; runs are deterministic given the seed.  burn_in < 0 selects the
/// default of steps/5.
ChainResult run_chain(const EnsembleSpec& spec, int steps, std::uint64_t seed, int burn_in = -1);

enum class LinearStatistic { sum_x, sum_x2, count_below };

struct StatSummary {
  double mean = 0.0;
  double stderr_mean = 0.0;  // batch-means standard error, 16 batches
};

/// Batch-means mean and standard error of a per-configuration statistic.
/// t is the threshold for count_below and ignored otherwise.
StatSummary linear_statistic(const std::vector<std::vector<double>>& samples, LinearStatistic f,
                             double t = 0.0);

}  // namespace mb
