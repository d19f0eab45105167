#ifndef DOXA_OBSERVATION_HPP
#define DOXA_OBSERVATION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "doxa/alphabet.hpp"
#include "doxa/mass_function.hpp"

namespace doxa {

/// A finite conjunction of cylinder events. Sampling is i.i.d., so only the
/// number of times each outcome was observed matters; the empty event is the
/// tautological event (no observation).
class ObservationEvent {
 public:
  /// The empty event.
  explicit ObservationEvent(OutcomeAlphabet alphabet);
  /// Throws WrongArity when the counts do not match the alphabet.
  ObservationEvent(OutcomeAlphabet alphabet, std::vector<std::uint64_t> counts);

  const OutcomeAlphabet& alphabet() const { return alphabet_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t count(std::size_t i) const { return counts_.at(i); }
  std::uint64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }

  /// One observation of outcome `index`.
  static ObservationEvent single(const OutcomeAlphabet& alphabet,
                                 std::size_t index);

  bool operator==(const ObservationEvent& other) const {
    return counts_ == other.counts_ && alphabet_ == other.alphabet_;
  }

 private:
  OutcomeAlphabet alphabet_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Counts a sequence of outcome names. Throws UnknownOutcome.
ObservationEvent observe(const OutcomeAlphabet& alphabet,
                         const std::vector<std::string>& sequence);

/// Whitespace-separated outcome names, e.g. "H H H".
ObservationEvent parse_event(const OutcomeAlphabet& alphabet,
                             std::string_view text);

/// Conjunction of two events: componentwise count sum.
ObservationEvent event_concat(const ObservationEvent& a,
                              const ObservationEvent& b);

/// ln of the i.i.d. probability world assigns to e: sum of count_i ln mu(o_i).
/// A zero count contributes 0 even when mu(o_i) = 0; a positive count of an
/// impossible outcome yields -infinity.
double log_likelihood(const MassFunction& world, const ObservationEvent& e);

}  // namespace doxa

#endif  // DOXA_OBSERVATION_HPP
