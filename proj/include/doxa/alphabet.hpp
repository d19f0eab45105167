#ifndef DOXA_ALPHABET_HPP
#define DOXA_ALPHABET_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace doxa {

/// Finite, ordered set of outcome names o1..on (n >= 2). The order is the
/// canonical index used by every weight and count vector over the alphabet.
/// Copies share the name table.
class OutcomeAlphabet {
 public:
  const std::vector<std::string>& names() const { return *names_; }
  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return names_->at(i); }

  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Throws Error(UnknownOutcome).
  std::size_t require_index(const std::string& name) const;

  bool operator==(const OutcomeAlphabet& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
  }

 private:
  friend OutcomeAlphabet make_alphabet(std::vector<std::string> names);
  explicit OutcomeAlphabet(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(
            std::move(names))) {}

  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Errors: TooFewOutcomes, DuplicateOutcome, EmptyOutcomeName.
OutcomeAlphabet make_alphabet(std::vector<std::string> names);

/// Throws Error(AlphabetMismatch) unless both alphabets are identical.
void require_same_alphabet(const OutcomeAlphabet& a, const OutcomeAlphabet& b);

}  // namespace doxa

#endif  // DOXA_ALPHABET_HPP
