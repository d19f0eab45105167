#ifndef DOXA_STREAM_HPP
#define DOXA_STREAM_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "doxa/mass_function.hpp"
#include "doxa/observation.hpp"

namespace doxa {

/// A finite prefix of an observation stream, together with the seed that
/// produced it.
struct ObservationStream {
  OutcomeAlphabet alphabet;
  std::vector<std::uint32_t> outcomes;
  std::uint64_t seed = 0;

  std::size_t size() const { return outcomes.size(); }

  /// Counts of the first `m` observations.
  ObservationEvent prefix_event(std::size_t m) const;
};

/// i.i.d. draws from `truth`.
///
/// Generator: std::mt19937_64 constructed from `seed`. Each draw takes one
/// 64-bit output x, forms u = (x >> 11) * 2^-53 in [0,1), and returns the
/// first outcome i whose cumulative weight (exact rational prefix sum,
/// rounded to double) exceeds u. Both steps are fully specified, so a
/// stream is reproducible bit for bit from (seed, truth, length), and an
/// outcome of weight zero is never drawn.
ObservationStream sample_stream(const MassFunction& truth, std::size_t length,
                                std::uint64_t seed);

/// Seed of trial `index` in an experiment seeded with `base_seed`
/// (splitmix64 finaliser applied to both inputs).
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index);

}  // namespace doxa

#endif  // DOXA_STREAM_HPP
