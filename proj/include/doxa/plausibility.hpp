#ifndef DOXA_PLAUSIBILITY_HPP
#define DOXA_PLAUSIBILITY_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "doxa/mass_function.hpp"
#include "doxa/observation.hpp"
#include "doxa/proposition.hpp"

namespace doxa {

/// Two log-plausibilities tie when |a - b| <= kTieRelTolerance * max(1, |a|, |b|).
inline constexpr double kTieRelTolerance = 1e-9;

bool log_values_tie(double a, double b);

enum class PlausibilityKind { Entropy, CentreOfMass, Tabulated };

/// A plausibility map on worlds, with values in [0, inf).
struct PlausibilityFn {
  PlausibilityKind kind = PlausibilityKind::Entropy;
  /// World index -> plausibility. Only used by Tabulated.
  std::map<std::size_t, double> table;

  static PlausibilityFn entropy() { return {PlausibilityKind::Entropy, {}}; }
  static PlausibilityFn centre_of_mass() {
    return {PlausibilityKind::CentreOfMass, {}};
  }
  static PlausibilityFn tabulated(std::map<std::size_t, double> table) {
    return {PlausibilityKind::Tabulated, std::move(table)};
  }
  /// Tabulated, 1 everywhere on a frame of `worlds` worlds.
  static PlausibilityFn constant(std::size_t worlds);

  bool operator==(const PlausibilityFn&) const = default;
};

/// Shannon entropy in nats, with 0 ln 0 = 0.
double entropy_plausibility(const MassFunction& world);

/// Product of the weights, i.e. exp of the sum of log-weights. Zero on the
/// simplex boundary, maximal at the uniform distribution.
double centre_of_mass_plausibility(const MassFunction& world);

/// Current plausibilities of a frame's worlds, stored as natural logs
/// (-infinity encodes plausibility 0).
///
/// The state remembers the base log-plausibilities and the conjunction of
/// every event it has been conditioned on; the current values are always
/// base + log_likelihood(world, accumulated event). Conditioning on e then
/// e' and on e' then e therefore give bit-identical values.
class PlausibilityState {
 public:
  const std::vector<MassFunction>& worlds() const { return *worlds_; }
  std::size_t size() const { return worlds_->size(); }
  const OutcomeAlphabet& alphabet() const { return event_.alphabet(); }

  std::span<const double> log_values() const { return log_values_; }
  double log_value(std::size_t i) const { return log_values_.at(i); }
  /// exp(log_value(i))
  double value(std::size_t i) const;

  std::span<const double> base_log_values() const { return *base_log_; }
  const PlausibilityFn& base() const { return base_; }
  const ObservationEvent& event() const { return event_; }

 private:
  friend PlausibilityState init_state(std::vector<MassFunction> worlds,
                                      const PlausibilityFn& fn);
  friend PlausibilityState condition(const PlausibilityState& state,
                                     const ObservationEvent& e);
  friend PlausibilityState restrict_state(const PlausibilityState& state,
                                          const Proposition& keep);

  PlausibilityState(std::shared_ptr<const std::vector<MassFunction>> worlds,
                    std::shared_ptr<const std::vector<double>> base_log,
                    PlausibilityFn base, ObservationEvent event);

  std::shared_ptr<const std::vector<MassFunction>> worlds_;
  std::shared_ptr<const std::vector<double>> base_log_;
  PlausibilityFn base_;
  ObservationEvent event_;
  std::vector<double> log_values_;
};

/// Errors: EmptyWorldSet; IncompleteTable (a Tabulated table missing a
/// world); InvalidArgument (negative or non-finite table entry, or a table
/// key outside the frame); AlphabetMismatch (worlds over different
/// alphabets).
PlausibilityState init_state(std::vector<MassFunction> worlds,
                             const PlausibilityFn& fn);

/// Plausibilistic Bayes rule: pla_e(w) = pla(w) * P_w(e).
PlausibilityState condition(const PlausibilityState& state,
                            const ObservationEvent& e);

/// Keeps the worlds in `keep` (in their original relative order) with their
/// plausibilities unchanged. Throws EmptyUpdate when `keep` is empty.
PlausibilityState restrict_state(const PlausibilityState& state,
                                 const Proposition& keep);

/// Worlds whose log-value ties with the maximum. Never empty: when every
/// value is -infinity all worlds are returned.
Proposition argmax_worlds(const PlausibilityState& state);

/// Maximally plausible worlds among `within`; empty iff `within` is empty.
Proposition argmax_within(const PlausibilityState& state,
                          const Proposition& within);

}  // namespace doxa

#endif  // DOXA_PLAUSIBILITY_HPP
