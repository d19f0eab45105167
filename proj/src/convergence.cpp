#include "doxa/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <span>
#include <stdexcept>

#include "doxa/detail/parallel.hpp"
#include "doxa/error.hpp"
#include "doxa/simplex.hpp"

namespace doxa {

namespace {

// Settle time from the per-step verdicts in_ball[m-1], m = 1..horizon.
std::optional<std::size_t> settle_time_of(const std::vector<bool>& in_ball) {
  if (in_ball.empty() || !in_ball.back()) return std::nullopt;
  std::size_t k = in_ball.size();
  while (k > 0 && in_ball[k - 1]) --k;
  return k + 1;
}

std::size_t nearest_rank(const std::vector<std::size_t>& sorted, double q) {
  const auto n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(q * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

bool bitwise_equal(std::span<const double> a, std::span<const double> b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

double isolating_epsilon(const MassFunction& truth,
                         const std::vector<MassFunction>& worlds) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& w : worlds) {
    if (w == truth) continue;
    best = std::min(best, euclidean_distance(truth, w));
  }
  return std::isinf(best) ? 1.0 : best / 2;
}

TrialResult run_trial(const TrialConfig& config) {
  const auto& worlds = config.model.worlds();
  const auto truth_index = find_world(worlds, config.truth);
  if (!truth_index) {
    throw Error(ErrorCode::TruthNotInWorlds,
                "true distribution " + config.truth.to_string() +
                    " is not a world of the model");
  }
  if (std::isinf(config.model.state().log_value(*truth_index))) {
    throw Error(ErrorCode::ZeroPlausibilityTruth,
                "true distribution has plausibility 0");
  }
  const Proposition ball = epsilon_ball(config.truth, config.epsilon, worlds);

  TrialResult result;
  result.final_argmax = argmax_worlds(config.model.state());
  if (config.horizon == 0) return result;

  const ObservationStream stream =
      sample_stream(config.truth, config.horizon, config.seed);
  const auto& alphabet = config.model.alphabet();
  std::vector<ObservationEvent> unit;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    unit.push_back(ObservationEvent::single(alphabet, i));
  }

  std::vector<bool> in_ball;
  in_ball.reserve(config.horizon);
  PlausibilityState state = config.model.state();
  for (std::size_t m = 1; m <= config.horizon; ++m) {
    state = condition(state, unit[stream.outcomes[m - 1]]);
    Proposition best = argmax_worlds(state);
    in_ball.push_back(best.subset_of(ball));
    if (config.record_trace) result.belief_trace.push_back(best.indices().front());
    if (m == config.horizon) result.final_argmax = std::move(best);
  }

  if (config.verify_incremental) {
    PlausibilityState batch =
        condition(config.model.state(), stream.prefix_event(config.horizon));
    if (!bitwise_equal(batch.log_values(), state.log_values())) {
      throw std::logic_error("incremental conditioning diverged from batch");
    }
  }

  result.settle_time = settle_time_of(in_ball);
  result.settled = result.settle_time.has_value();
  return result;
}

TrialResult bayesian_baseline_trial(const TrialConfig& config) {
  const auto& worlds = config.model.worlds();
  const Proposition ball = epsilon_ball(config.truth, config.epsilon, worlds);
  TrialResult result;
  result.final_argmax = Proposition::all(worlds.size());
  if (config.horizon == 0) return result;

  const ObservationStream stream =
      sample_stream(config.truth, config.horizon, config.seed);
  const auto& alphabet = config.model.alphabet();
  std::vector<std::uint64_t> counts(alphabet.size(), 0);
  std::vector<double> log_post(worlds.size());
  std::vector<bool> in_ball;
  in_ball.reserve(config.horizon);

  for (std::size_t m = 1; m <= config.horizon; ++m) {
    ++counts[stream.outcomes[m - 1]];
    const ObservationEvent e(alphabet, counts);
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < worlds.size(); ++i) {
      log_post[i] = log_likelihood(worlds[i], e);
      top = std::max(top, log_post[i]);
    }
    bool believes = false;
    std::size_t mode = 0;
    if (!std::isinf(top)) {
      double total = 0.0, inside = 0.0;
      for (std::size_t i = 0; i < worlds.size(); ++i) {
        const double p = std::exp(log_post[i] - top);
        total += p;
        if (ball.contains(i)) inside += p;
        if (log_post[i] > log_post[mode]) mode = i;
      }
      believes = inside / total > kBaselineMassThreshold;
    }
    in_ball.push_back(believes);
    if (config.record_trace) result.belief_trace.push_back(mode);
  }
  result.settle_time = settle_time_of(in_ball);
  result.settled = result.settle_time.has_value();
  return result;
}

SettleStats summarize(const std::vector<std::optional<std::size_t>>& settle_times) {
  SettleStats stats;
  stats.trials = settle_times.size();
  std::vector<std::size_t> times;
  for (const auto& t : settle_times) {
    if (t) times.push_back(*t);
  }
  stats.settled = times.size();
  stats.settle_fraction =
      stats.trials == 0 ? 0.0
                        : static_cast<double>(stats.settled) /
                              static_cast<double>(stats.trials);
  if (!times.empty()) {
    std::sort(times.begin(), times.end());
    stats.median = nearest_rank(times, 0.5);
    stats.p90 = nearest_rank(times, 0.9);
    stats.max = times.back();
  }
  return stats;
}

ExperimentSummary run_experiment(const TrialConfig& config, std::size_t trials,
                                 std::uint64_t base_seed, bool with_baseline) {
  if (trials == 0) {
    throw Error(ErrorCode::InvalidArgument, "an experiment needs >= 1 trial");
  }
  std::vector<TrialRecord> records(trials);
  detail::parallel_for(trials, [&](std::size_t i) {
    TrialConfig trial = config;
    trial.seed = derive_seed(base_seed, i);
    trial.record_trace = false;
    TrialRecord& rec = records[i];
    rec.seed = trial.seed;
    const TrialResult r = run_trial(trial);
    rec.settled = r.settled;
    rec.settle_time = r.settle_time;
    if (with_baseline) {
      const TrialResult b = bayesian_baseline_trial(trial);
      rec.baseline_settled = b.settled;
      rec.baseline_settle_time = b.settle_time;
    }
  });

  ExperimentSummary summary;
  std::vector<std::optional<std::size_t>> learner, baseline;
  for (const auto& r : records) {
    learner.push_back(r.settle_time);
    baseline.push_back(r.baseline_settle_time);
  }
  summary.learner = summarize(learner);
  if (with_baseline) summary.baseline = summarize(baseline);
  summary.records = std::move(records);
  return summary;
}

}  // namespace doxa
