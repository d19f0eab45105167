#ifndef DOXA_TESTS_FIXTURES_HPP
#define DOXA_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "doxa/doxastic.hpp"
#include "doxa/mass_function.hpp"
#include "doxa/simplex.hpp"

namespace fx {

inline doxa::OutcomeAlphabet coin() { return doxa::make_alphabet({"H", "T"}); }
inline doxa::OutcomeAlphabet urn() { return doxa::make_alphabet({"R", "B", "G"}); }

/// World from integer numerators over a common denominator.
inline doxa::MassFunction world(const doxa::OutcomeAlphabet& a,
                                const std::vector<int>& num, int den) {
  std::vector<doxa::Rational> w;
  for (int k : num) w.emplace_back(k, den);
  for (auto& r : w) r.canonicalize();
  return doxa::mass_function(a, w);
}

/// Coin world with P(H) = h / den.
inline doxa::MassFunction coin_world(int h, int den) {
  return world(coin(), {h, den - h}, den);
}

inline std::vector<double> probs(const doxa::MassFunction& m) {
  return {m.probabilities().begin(), m.probabilities().end()};
}

inline doxa::Model coin_grid_model(std::size_t N,
                                   const doxa::PlausibilityFn& fn =
                                       doxa::PlausibilityFn::entropy()) {
  return doxa::make_model(doxa::simplex_grid(coin(), N), fn);
}

/// Index of the coin world with P(H) = h / den in a grid of resolution den.
inline std::size_t coin_index(const doxa::Model& m, int h, int den) {
  return *doxa::find_world(m.worlds(), coin_world(h, den));
}

}  // namespace fx

#endif  // DOXA_TESTS_FIXTURES_HPP
