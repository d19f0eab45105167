#include "doxa/observation.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "doxa/error.hpp"

namespace doxa {

ObservationEvent::ObservationEvent(OutcomeAlphabet alphabet)
    : alphabet_(std::move(alphabet)), counts_(alphabet_.size(), 0) {}

ObservationEvent::ObservationEvent(OutcomeAlphabet alphabet,
                                   std::vector<std::uint64_t> counts)
    : alphabet_(std::move(alphabet)), counts_(std::move(counts)) {
  if (counts_.size() != alphabet_.size()) {
    throw Error(ErrorCode::WrongArity,
                "expected " + std::to_string(alphabet_.size()) +
                    " counts, got " + std::to_string(counts_.size()));
  }
  for (auto c : counts_) total_ += c;
}

ObservationEvent ObservationEvent::single(const OutcomeAlphabet& alphabet,
                                          std::size_t index) {
  std::vector<std::uint64_t> counts(alphabet.size(), 0);
  counts.at(index) = 1;
  return ObservationEvent(alphabet, std::move(counts));
}

ObservationEvent observe(const OutcomeAlphabet& alphabet,
                         const std::vector<std::string>& sequence) {
  std::vector<std::uint64_t> counts(alphabet.size(), 0);
  for (const auto& name : sequence) ++counts[alphabet.require_index(name)];
  return ObservationEvent(alphabet, std::move(counts));
}

ObservationEvent parse_event(const OutcomeAlphabet& alphabet,
                             std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> names;
  for (std::string tok; in >> tok;) names.push_back(tok);
  return observe(alphabet, names);
}

ObservationEvent event_concat(const ObservationEvent& a,
                              const ObservationEvent& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  std::vector<std::uint64_t> counts = a.counts();
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += b.count(i);
  return ObservationEvent(a.alphabet(), std::move(counts));
}

double log_likelihood(const MassFunction& world, const ObservationEvent& e) {
  require_same_alphabet(world.alphabet(), e.alphabet());
  const auto logs = world.log_probabilities();
  double sum = 0.0;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    const auto c = e.count(i);
    if (c == 0) continue;
    if (std::isinf(logs[i])) return -std::numeric_limits<double>::infinity();
    sum += static_cast<double>(c) * logs[i];
  }
  return sum;
}

}  // namespace doxa
