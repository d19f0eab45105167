#ifndef DOXA_SIMPLEX_HPP
#define DOXA_SIMPLEX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "doxa/mass_function.hpp"
#include "doxa/proposition.hpp"

namespace doxa {

/// Every mass function whose coordinates are multiples of 1/resolution, in
/// ascending lexicographic order of the weight vectors. There are
/// C(resolution + n - 1, n - 1) of them.
std::vector<MassFunction> simplex_grid(const OutcomeAlphabet& alphabet,
                                       std::size_t resolution);

/// Exact sum of squared coordinate differences.
Rational squared_distance(const MassFunction& a, const MassFunction& b);

/// Euclidean distance between two worlds over the same alphabet.
double euclidean_distance(const MassFunction& a, const MassFunction& b);

/// Open ball {w in worlds | d(center, w) < eps}. The comparison is done on
/// exact squared distances against the exact value of eps, so there is no
/// rounding at the boundary.
Proposition epsilon_ball(const MassFunction& center, double eps,
                         const std::vector<MassFunction>& worlds);

/// Index of `world` in `worlds`, if present.
std::optional<std::size_t> find_world(const std::vector<MassFunction>& worlds,
                          const MassFunction& world);

}  // namespace doxa

#endif  // DOXA_SIMPLEX_HPP
