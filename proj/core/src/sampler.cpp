#include "mb/sampler.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace mb {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double signed_power(double x, double theta) {
  return (x >= 0 ? 1.0 : -1.0) * std::pow(std::fabs(x), theta);
}

// Fold a proposal back into the open interval (lo, hi) by reflection.
// Infinite endpoints pass through.
double reflect(double x, double lo, double hi) {
  if (std::isfinite(lo) && std::isfinite(hi)) {
    const double width = hi - lo;
    double t = std::fmod(x - lo, 2.0 * width);
    if (t < 0) t += 2.0 * width;
    return lo + (t <= width ? t : 2.0 * width - t);
  }
  if (std::isfinite(lo) && x < lo) return 2.0 * lo - x;
  if (std::isfinite(hi) && x > hi) return 2.0 * hi - x;
  return x;
}

double log_weight(const WeightSpec& w, double x) {
  double v = weight_eval(w, x);
  return v > 0 ? std::log(v) : kNegInf;
}

}  // namespace

double log_target(const EnsembleSpec& spec, std::span<const double> positions) {
  const int n = static_cast<int>(positions.size());
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    double lw = log_weight(spec.weight, positions[i]);
    if (lw == kNegInf) return kNegInf;
    s += lw;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d1 = positions[j] - positions[i];
      double d2 = signed_power(positions[j], spec.theta) - signed_power(positions[i], spec.theta);
      if (d1 == 0.0 || d2 == 0.0) return kNegInf;
      s += std::log(std::fabs(d1)) + std::log(std::fabs(d2));
    }
  return s;
}

ChainResult run_chain(const EnsembleSpec& spec, int steps, std::uint64_t seed, int burn_in) {
  spec.validate();
  if (steps < 1) throw std::domain_error("run_chain: steps must be >= 1");
  if (burn_in < 0) burn_in = steps / 5;
  const int n = spec.n;
  auto [lo, hi] = spec.weight.support();

  ChainState st;
  st.rng.seed(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  // Spread the initial configuration over the bulk of the support.
  st.positions.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (std::isfinite(lo) && std::isfinite(hi))
      st.positions[i] = lo + (hi - lo) * (i + 1.0) / (n + 1.0);
    else if (std::isfinite(lo))
      st.positions[i] = lo + 0.5 + i;
    else
      st.positions[i] = -0.5 * (n - 1) + i;
  }
  st.log_density = log_target(spec, st.positions);
  if (st.log_density == kNegInf) throw std::runtime_error("run_chain: invalid initial configuration");

  st.step_scale = std::isfinite(hi - lo) ? 0.1 * (hi - lo) : 0.5;
  long accepted = 0, proposed = 0;
  long tune_accepted = 0, tune_proposed = 0;

  ChainResult out;
  out.samples.reserve(static_cast<std::size_t>(steps - burn_in > 0 ? steps - burn_in : 0));

  for (int step = 0; step < steps; ++step) {
    const bool tuning = step < burn_in;
    for (int i = 0; i < n; ++i) {
      double old = st.positions[i];
      st.positions[i] = reflect(old + st.step_scale * gauss(st.rng), lo, hi);
      double lp_new = log_target(spec, st.positions);
      bool accept = lp_new > st.log_density ||
                    (lp_new > kNegInf && unif(st.rng) < std::exp(lp_new - st.log_density));
      if (accept) {
        st.log_density = lp_new;
      } else {
        st.positions[i] = old;
      }
      if (tuning) {
        ++tune_proposed;
        tune_accepted += accept ? 1 : 0;
      } else {
        ++proposed;
        accepted += accept ? 1 : 0;
      }
    }
    if (tuning && tune_proposed >= 200) {
      double rate = static_cast<double>(tune_accepted) / tune_proposed;
      if (rate > 0.5) st.step_scale *= 1.25;
      if (rate < 0.3) st.step_scale /= 1.25;
      tune_accepted = tune_proposed = 0;
    }
    if (!tuning) out.samples.push_back(st.positions);
  }

  out.acceptance_rate =
      proposed > 0 ? static_cast<double>(accepted) / proposed
                   : static_cast<double>(tune_accepted) / std::max<long>(tune_proposed, 1);
  out.step_scale = st.step_scale;
  out.final_state = st;
  if (out.acceptance_rate == 0.0)
    throw std::runtime_error("run_chain: zero acceptance after tuning (step scale " +
                             std::to_string(st.step_scale) + ")");
  return out;
}

StatSummary linear_statistic(const std::vector<std::vector<double>>& samples, LinearStatistic f,
                             double t) {
  constexpr int kBatches = 16;
  const std::size_t m = samples.size();
  if (m < kBatches)
    throw std::domain_error("linear_statistic: need at least 16 samples for batch means");

  auto value = [&](const std::vector<double>& row) {
    double s = 0.0;
    for (double v : row) {
      switch (f) {
        case LinearStatistic::sum_x: s += v; break;
        case LinearStatistic::sum_x2: s += v * v; break;
        case LinearStatistic::count_below: s += (v < t) ? 1.0 : 0.0; break;
      }
    }
    return s;
  };

  const std::size_t batch = m / kBatches;
  std::vector<double> means(kBatches, 0.0);
  double grand = 0.0;
  for (int b = 0; b < kBatches; ++b) {
    double s = 0.0;
    for (std::size_t i = b * batch; i < (b + 1) * batch; ++i) s += value(samples[i]);
    means[b] = s / static_cast<double>(batch);
    grand += means[b];
  }
  grand /= kBatches;
  double var = 0.0;
  for (double mu : means) var += (mu - grand) * (mu - grand);
  var /= (kBatches - 1);
  return {grand, std::sqrt(var / kBatches)};
}

}  // namespace mb
