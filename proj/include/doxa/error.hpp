#ifndef DOXA_ERROR_HPP
#define DOXA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace doxa {

enum class ErrorCode {
  DuplicateOutcome,
  TooFewOutcomes,
  EmptyOutcomeName,
  WrongArity,
  NegativeWeight,
  SumNotOne,
  AlphabetMismatch,
  UnknownOutcome,
  InvalidArgument,
  EmptyWorldSet,
  IncompleteTable,
  EmptyUpdate,
  WorldNotInModel,
  ParseError,
  TruthNotInWorlds,
  ZeroPlausibilityTruth,
  ModelFormat,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace doxa

#endif  // DOXA_ERROR_HPP
