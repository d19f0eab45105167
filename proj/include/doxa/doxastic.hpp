#ifndef DOXA_DOXASTIC_HPP
#define DOXA_DOXASTIC_HPP

#include <cstddef>
#include <vector>

#include "doxa/plausibility.hpp"
#include "doxa/proposition.hpp"

namespace doxa {

/// A probabilistic plausibility frame: a non-empty set of worlds with the
/// current plausibility of each.
class Frame {
 public:
  explicit Frame(PlausibilityState state) : state_(std::move(state)) {}

  const PlausibilityState& state() const { return state_; }
  const std::vector<MassFunction>& worlds() const { return state_.worlds(); }
  std::size_t size() const { return state_.size(); }

 private:
  PlausibilityState state_;
};

/// A frame together with its outcome alphabet. Each outcome is read as the
/// cylinder event "the next draw is this outcome"; under i.i.d. sampling the
/// draw position is irrelevant, so the valuation needs no explicit table.
class Model {
 public:
  explicit Model(Frame frame) : frame_(std::move(frame)) {}

  const Frame& frame() const { return frame_; }
  const PlausibilityState& state() const { return frame_.state(); }
  const std::vector<MassFunction>& worlds() const { return frame_.worlds(); }
  const OutcomeAlphabet& alphabet() const { return frame_.state().alphabet(); }
  std::size_t size() const { return frame_.size(); }

 private:
  Frame frame_;
};

Model make_model(std::vector<MassFunction> worlds, const PlausibilityFn& fn);

/// K(P): every world of the frame is in P.
bool knowledge_holds(const Frame& frame, const Proposition& p);

/// B(P): every maximally plausible world is in P.
bool belief_holds(const Frame& frame, const Proposition& p);

/// B(P | e): the maximally plausible worlds after conditioning on e are all
/// in P. The frame is not modified.
bool conditional_belief_event(const Frame& frame, const Proposition& p,
                              const ObservationEvent& e);

/// B(P | Q): the most plausible Q-worlds are all in P. True when Q is empty.
bool conditional_belief_prop(const Frame& frame, const Proposition& p,
                             const Proposition& q);

/// Sampling update: same worlds, plausibility conditioned on e.
Model update_sampling(const Model& model, const ObservationEvent& e);

/// Higher-order update: worlds restricted to P (relative order kept),
/// plausibility values carried over. Throws EmptyUpdate when P is empty.
Model update_proposition(const Model& model, const Proposition& p);

}  // namespace doxa

#endif  // DOXA_DOXASTIC_HPP
