#ifndef DOXA_CHECKER_HPP
#define DOXA_CHECKER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "doxa/doxastic.hpp"
#include "doxa/formula.hpp"

namespace doxa {

struct CheckOptions {
  /// When false, [theta]phi drops its guard: worlds failing theta also fail
  /// [theta]phi instead of satisfying it vacuously. Only exists so the axiom
  /// suite can show it detects a broken semantics.
  bool relativize_announcements = true;
};

/// Set of worlds of `model` satisfying `f`, computed bottom-up with exact
/// rational arithmetic for the linear atoms. Throws UnknownOutcome when the
/// formula mentions an outcome missing from the model's alphabet.
Proposition extension(const Model& model, const Formula& f,
                      const CheckOptions& options = {});

/// Truth of `f` at `world`. Throws WorldNotInModel.
bool satisfies(const Model& model, const MassFunction& world, const Formula& f,
               const CheckOptions& options = {});

/// Truth of `f` at every world of the model.
bool valid_in_model(const Model& model, const Formula& f,
                    const CheckOptions& options = {});

struct TraceEntry {
  std::string subformula;
  bool verdict;
};

struct CheckResult {
  bool verdict = false;
  std::size_t world = 0;
  /// Subformulas in post-order with their truth value at `world`. Bodies of
  /// [o] and [theta] live in updated models and are not listed.
  std::vector<TraceEntry> trace;
};

/// Like satisfies, addressed by world index, optionally with a trace.
CheckResult check_world(const Model& model, std::size_t world,
                        const Formula& f, bool with_trace = false,
                        const CheckOptions& options = {});

}  // namespace doxa

#endif  // DOXA_CHECKER_HPP
