#ifndef DOXA_MASS_FUNCTION_HPP
#define DOXA_MASS_FUNCTION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "doxa/alphabet.hpp"
#include "doxa/rational.hpp"

namespace doxa {

/// A point of the probability simplex over an alphabet: one possible world.
///
/// Weights are exact rationals so that linear constraints over worlds are
/// decided without rounding. Double copies of the weights and of their
/// natural logs are cached for the likelihood arithmetic; a zero weight has
/// log -infinity.
class MassFunction {
 public:
  const OutcomeAlphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return weights_.size(); }

  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(std::size_t i) const { return weights_.at(i); }

  std::span<const double> probabilities() const { return probs_; }
  std::span<const double> log_probabilities() const { return log_probs_; }

  /// "(1/2, 1/2)"
  std::string to_string() const;

  bool operator==(const MassFunction& other) const {
    return weights_ == other.weights_ && alphabet_ == other.alphabet_;
  }

 private:
  friend MassFunction mass_function(const OutcomeAlphabet& alphabet,
                                    std::vector<Rational> weights);
  MassFunction(OutcomeAlphabet alphabet, std::vector<Rational> weights);

  OutcomeAlphabet alphabet_;
  std::vector<Rational> weights_;
  std::vector<double> probs_;
  std::vector<double> log_probs_;
};

/// Validates and builds a world. Errors: WrongArity, NegativeWeight (also
/// raised for a weight above 1), SumNotOne (exact comparison).
MassFunction mass_function(const OutcomeAlphabet& alphabet,
                           std::vector<Rational> weights);

}  // namespace doxa

#endif  // DOXA_MASS_FUNCTION_HPP
