#include "doxa/mass_function.hpp"

#include <cmath>
#include <limits>

#include "doxa/error.hpp"

namespace doxa {

MassFunction::MassFunction(OutcomeAlphabet alphabet,
                           std::vector<Rational> weights)
    : alphabet_(std::move(alphabet)), weights_(std::move(weights)) {
  probs_.reserve(weights_.size());
  log_probs_.reserve(weights_.size());
  for (const auto& w : weights_) {
    const double p = w.get_d();
    probs_.push_back(p);
    log_probs_.push_back(sgn(w) == 0 ? -std::numeric_limits<double>::infinity()
                                     : std::log(p));
  }
}

std::string MassFunction::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_rational(weights_[i]);
  }
  return out + ")";
}

MassFunction mass_function(const OutcomeAlphabet& alphabet,
                           std::vector<Rational> weights) {
  if (weights.size() != alphabet.size()) {
    throw Error(ErrorCode::WrongArity,
                "expected " + std::to_string(alphabet.size()) +
                    " weights, got " + std::to_string(weights.size()));
  }
  Rational sum = 0;
  for (auto& w : weights) {
    w.canonicalize();
    if (sgn(w) < 0 || w > 1) {
      throw Error(ErrorCode::NegativeWeight,
                  "weight " + format_rational(w) + " is outside [0,1]");
    }
    sum += w;
  }
  if (sum != 1) {
    throw Error(ErrorCode::SumNotOne,
                "weights sum to " + format_rational(sum) + ", not 1");
  }
  return MassFunction(alphabet, std::move(weights));
}

}  // namespace doxa
