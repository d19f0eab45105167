#include "doxa/alphabet.hpp"

#include <set>

#include "doxa/error.hpp"

namespace doxa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateOutcome: return "DuplicateOutcome";
    case ErrorCode::TooFewOutcomes: return "TooFewOutcomes";
    case ErrorCode::EmptyOutcomeName: return "EmptyOutcomeName";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::UnknownOutcome: return "UnknownOutcome";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyWorldSet: return "EmptyWorldSet";
    case ErrorCode::IncompleteTable: return "IncompleteTable";
    case ErrorCode::EmptyUpdate: return "EmptyUpdate";
    case ErrorCode::WorldNotInModel: return "WorldNotInModel";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TruthNotInWorlds: return "TruthNotInWorlds";
    case ErrorCode::ZeroPlausibilityTruth: return "ZeroPlausibilityTruth";
    case ErrorCode::ModelFormat: return "ModelFormat";
  }
  return "Unknown";
}

std::optional<std::size_t> OutcomeAlphabet::index_of(
    const std::string& name) const {
  const auto& ns = *names_;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t OutcomeAlphabet::require_index(const std::string& name) const {
  if (auto i = index_of(name)) return *i;
  throw Error(ErrorCode::UnknownOutcome, "unknown outcome '" + name + "'");
}

OutcomeAlphabet make_alphabet(std::vector<std::string> names) {
  if (names.size() < 2) {
    throw Error(ErrorCode::TooFewOutcomes,
                "an outcome alphabet needs at least 2 names");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) {
      throw Error(ErrorCode::EmptyOutcomeName, "outcome names must be non-empty");
    }
    if (!seen.insert(n).second) {
      throw Error(ErrorCode::DuplicateOutcome, "duplicate outcome '" + n + "'");
    }
  }
  return OutcomeAlphabet(std::move(names));
}

void require_same_alphabet(const OutcomeAlphabet& a, const OutcomeAlphabet& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::AlphabetMismatch, "outcome alphabets differ");
  }
}

}  // namespace doxa
