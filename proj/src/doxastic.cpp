#include "doxa/doxastic.hpp"

#include "doxa/error.hpp"

namespace doxa {

namespace {

void require_over(const Frame& frame, const Proposition& p) {
  if (p.universe() != frame.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "proposition is not over this frame's worlds");
  }
}

}  // namespace

Model make_model(std::vector<MassFunction> worlds, const PlausibilityFn& fn) {
  return Model(Frame(init_state(std::move(worlds), fn)));
}

bool knowledge_holds(const Frame& frame, const Proposition& p) {
  require_over(frame, p);
  return p.is_full();
}

bool belief_holds(const Frame& frame, const Proposition& p) {
  require_over(frame, p);
  return argmax_worlds(frame.state()).subset_of(p);
}

bool conditional_belief_event(const Frame& frame, const Proposition& p,
                              const ObservationEvent& e) {
  require_over(frame, p);
  return argmax_worlds(condition(frame.state(), e)).subset_of(p);
}

bool conditional_belief_prop(const Frame& frame, const Proposition& p,
                             const Proposition& q) {
  require_over(frame, p);
  require_over(frame, q);
  return argmax_within(frame.state(), q).subset_of(p);
}

Model update_sampling(const Model& model, const ObservationEvent& e) {
  return Model(Frame(condition(model.state(), e)));
}

Model update_proposition(const Model& model, const Proposition& p) {
  require_over(model.frame(), p);
  if (p.empty()) {
    throw Error(ErrorCode::EmptyUpdate,
                "updating with an empty proposition leaves no worlds");
  }
  return Model(Frame(restrict_state(model.state(), p)));
}

}  // namespace doxa
