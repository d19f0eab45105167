#include "doxa/simplex.hpp"

#include <cmath>

#include "doxa/error.hpp"

namespace doxa {

namespace {

void enumerate(const OutcomeAlphabet& alphabet, std::size_t resolution,
               std::size_t position, std::size_t remaining,
               std::vector<std::size_t>& ticks,
               std::vector<MassFunction>& out) {
  if (position + 1 == ticks.size()) {
    ticks[position] = remaining;
    std::vector<Rational> weights;
    weights.reserve(ticks.size());
    for (auto k : ticks) {
      weights.emplace_back(static_cast<unsigned long>(k),
                           static_cast<unsigned long>(resolution));
    }
    out.push_back(mass_function(alphabet, std::move(weights)));
    return;
  }
  for (std::size_t k = 0; k <= remaining; ++k) {
    ticks[position] = k;
    enumerate(alphabet, resolution, position + 1, remaining - k, ticks, out);
  }
}

}  // namespace

std::vector<MassFunction> simplex_grid(const OutcomeAlphabet& alphabet,
                                       std::size_t resolution) {
  if (resolution == 0) {
    throw Error(ErrorCode::InvalidArgument, "grid resolution must be >= 1");
  }
  std::vector<MassFunction> out;
  std::vector<std::size_t> ticks(alphabet.size(), 0);
  enumerate(alphabet, resolution, 0, resolution, ticks, out);
  return out;
}

Rational squared_distance(const MassFunction& a, const MassFunction& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = a.weight(i) - b.weight(i);
    sum += d * d;
  }
  return sum;
}

double euclidean_distance(const MassFunction& a, const MassFunction& b) {
  return std::sqrt(squared_distance(a, b).get_d());
}

Proposition epsilon_ball(const MassFunction& center, double eps,
                         const std::vector<MassFunction>& worlds) {
  if (!(eps > 0) || !std::isfinite(eps)) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  }
  const Rational exact_eps(eps);
  const Rational eps_sq = exact_eps * exact_eps;
  Proposition ball(worlds.size());
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (squared_distance(center, worlds[i]) < eps_sq) ball.insert(i);
  }
  return ball;
}

std::optional<std::size_t> find_world(const std::vector<MassFunction>& worlds,
                          const MassFunction& world) {
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (worlds[i] == world) return i;
  }
  return std::nullopt;
}

}  // namespace doxa
