#ifndef DOXA_CONVERGENCE_HPP
#define DOXA_CONVERGENCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "doxa/doxastic.hpp"
#include "doxa/stream.hpp"

namespace doxa {

/// One learning run: a model whose worlds contain the true distribution,
/// the radius of the ball the belief should settle in, and how many
/// observations to draw.
struct TrialConfig {
  Model model;
  MassFunction truth;
  double epsilon = 0.0;
  std::size_t horizon = 0;
  std::uint64_t seed = 0;
  bool record_trace = false;
  /// Re-derive the final state from the batch count vector and require it to
  /// equal the incrementally conditioned one bit for bit.
  bool verify_incremental = false;
};

struct TrialResult {
  bool settled = false;
  /// Least K such that the belief is inside the ball for every m in
  /// [K, horizon]. This certifies "eventually stays" only up to the horizon.
  std::optional<std::size_t> settle_time;
  /// Per step m = 1..horizon, the lowest-index maximally plausible world.
  std::vector<std::size_t> belief_trace;
  /// Maximally plausible worlds after the last observation.
  Proposition final_argmax;
};

/// Half the smallest distance from `truth` to any other world: the ball of
/// that radius holds `truth` alone. 1.0 for a single-world set.
double isolating_epsilon(const MassFunction& truth,
                         const std::vector<MassFunction>& worlds);

/// Samples a stream from the truth and conditions one observation at a time.
/// Errors: TruthNotInWorlds; ZeroPlausibilityTruth (the truth has
/// plausibility 0 before sampling); InvalidArgument (epsilon <= 0).
TrialResult run_trial(const TrialConfig& config);

/// Posterior mass the ball must exceed for the Bayesian learner to count as
/// believing it.
inline constexpr double kBaselineMassThreshold = 0.95;

/// Bayesian comparison learner on the same stream (same seed): uniform prior
/// over the worlds, posterior proportional to the likelihood, "belief in the
/// ball" when its posterior mass exceeds kBaselineMassThreshold. The truth
/// need not be a world; with an empty ball the learner never settles.
TrialResult bayesian_baseline_trial(const TrialConfig& config);

struct SettleStats {
  std::size_t trials = 0;
  std::size_t settled = 0;
  double settle_fraction = 0.0;
  /// Nearest-rank quantiles of settle_time over settled trials.
  std::optional<std::size_t> median, p90, max;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  std::optional<std::size_t> settle_time;
  std::optional<std::size_t> baseline_settle_time;
  bool settled = false;
  bool baseline_settled = false;
};

struct ExperimentSummary {
  SettleStats learner;
  std::optional<SettleStats> baseline;
  std::vector<TrialRecord> records;
};

/// Independent trials; trial i uses seed derive_seed(base_seed, i), so the
/// summary depends only on (config, trials, base_seed). config.seed is
/// ignored.
ExperimentSummary run_experiment(const TrialConfig& config, std::size_t trials,
                                 std::uint64_t base_seed,
                                 bool with_baseline = false);

SettleStats summarize(const std::vector<std::optional<std::size_t>>& settle_times);

}  // namespace doxa

#endif  // DOXA_CONVERGENCE_HPP
