#include "doxa/plausibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "doxa/error.hpp"

namespace doxa {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double safe_log(double v) { return v > 0 ? std::log(v) : kNegInf; }

double base_log_value(const PlausibilityFn& fn, const MassFunction& world,
                      std::size_t index) {
  switch (fn.kind) {
    case PlausibilityKind::Entropy:
      return safe_log(entropy_plausibility(world));
    case PlausibilityKind::CentreOfMass: {
      double sum = 0.0;
      for (double l : world.log_probabilities()) sum += l;
      return sum;
    }
    case PlausibilityKind::Tabulated:
      return safe_log(fn.table.at(index));
  }
  return kNegInf;
}

}  // namespace

bool log_values_tie(double a, double b) {
  if (a == b) return true;  // includes -inf == -inf
  if (std::isinf(a) || std::isinf(b)) return false;
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= kTieRelTolerance * scale;
}

PlausibilityFn PlausibilityFn::constant(std::size_t worlds) {
  std::map<std::size_t, double> table;
  for (std::size_t i = 0; i < worlds; ++i) table.emplace(i, 1.0);
  return tabulated(std::move(table));
}

double entropy_plausibility(const MassFunction& world) {
  double h = 0.0;
  for (double p : world.probabilities()) {
    if (p > 0) h -= p * std::log(p);
  }
  return h;
}

double centre_of_mass_plausibility(const MassFunction& world) {
  double product = 1.0;
  for (double p : world.probabilities()) product *= p;
  return product;
}

PlausibilityState::PlausibilityState(
    std::shared_ptr<const std::vector<MassFunction>> worlds,
    std::shared_ptr<const std::vector<double>> base_log, PlausibilityFn base,
    ObservationEvent event)
    : worlds_(std::move(worlds)),
      base_log_(std::move(base_log)),
      base_(std::move(base)),
      event_(std::move(event)) {
  const auto& ws = *worlds_;
  const auto& bl = *base_log_;
  log_values_.resize(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    log_values_[i] = std::isinf(bl[i]) ? kNegInf
                                       : bl[i] + log_likelihood(ws[i], event_);
  }
}

double PlausibilityState::value(std::size_t i) const {
  return std::exp(log_value(i));
}

PlausibilityState init_state(std::vector<MassFunction> worlds,
                             const PlausibilityFn& fn) {
  if (worlds.empty()) {
    throw Error(ErrorCode::EmptyWorldSet, "a frame needs at least one world");
  }
  for (const auto& w : worlds) {
    require_same_alphabet(worlds.front().alphabet(), w.alphabet());
  }
  if (fn.kind == PlausibilityKind::Tabulated) {
    for (std::size_t i = 0; i < worlds.size(); ++i) {
      if (!fn.table.contains(i)) {
        throw Error(ErrorCode::IncompleteTable,
                    "plausibility table has no entry for world " +
                        std::to_string(i));
      }
    }
    for (const auto& [index, v] : fn.table) {
      if (index >= worlds.size()) {
        throw Error(ErrorCode::InvalidArgument,
                    "plausibility table entry for world " +
                        std::to_string(index) + " outside the frame");
      }
      if (!(v >= 0) || !std::isfinite(v)) {
        throw Error(ErrorCode::InvalidArgument,
                    "plausibility of world " + std::to_string(index) +
                        " must be a finite non-negative number");
      }
    }
  }
  auto base_log = std::make_shared<std::vector<double>>(worlds.size());
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    (*base_log)[i] = base_log_value(fn, worlds[i], i);
  }
  ObservationEvent empty(worlds.front().alphabet());
  return PlausibilityState(
      std::make_shared<const std::vector<MassFunction>>(std::move(worlds)),
      std::move(base_log), fn, std::move(empty));
}

PlausibilityState condition(const PlausibilityState& state,
                            const ObservationEvent& e) {
  return PlausibilityState(state.worlds_, state.base_log_, state.base_,
                           event_concat(state.event_, e));
}

PlausibilityState restrict_state(const PlausibilityState& state,
                                 const Proposition& keep) {
  if (keep.universe() != state.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "proposition is not over this frame's worlds");
  }
  if (keep.empty()) {
    throw Error(ErrorCode::EmptyUpdate, "cannot restrict a frame to no worlds");
  }
  auto worlds = std::make_shared<std::vector<MassFunction>>();
  auto base_log = std::make_shared<std::vector<double>>();
  PlausibilityFn base = state.base_;
  std::map<std::size_t, double> table;
  for (auto i : keep.indices()) {
    if (base.kind == PlausibilityKind::Tabulated) {
      table.emplace(worlds->size(), base.table.at(i));
    }
    worlds->push_back(state.worlds()[i]);
    base_log->push_back((*state.base_log_)[i]);
  }
  base.table = std::move(table);
  return PlausibilityState(std::move(worlds), std::move(base_log),
                           std::move(base), state.event_);
}

Proposition argmax_within(const PlausibilityState& state,
                          const Proposition& within) {
  if (within.universe() != state.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "proposition is not over this frame's worlds");
  }
  const auto values = state.log_values();
  double best = kNegInf;
  for (auto i : within.indices()) best = std::max(best, values[i]);
  Proposition out(state.size());
  for (auto i : within.indices()) {
    if (log_values_tie(values[i], best)) out.insert(i);
  }
  return out;
}

Proposition argmax_worlds(const PlausibilityState& state) {
  return argmax_within(state, Proposition::all(state.size()));
}

}  // namespace doxa
