#include "doxa/stream.hpp"

#include <random>

#include "doxa/error.hpp"

namespace doxa {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

ObservationEvent ObservationStream::prefix_event(std::size_t m) const {
  if (m > outcomes.size()) {
    throw Error(ErrorCode::InvalidArgument, "prefix longer than stream");
  }
  std::vector<std::uint64_t> counts(alphabet.size(), 0);
  for (std::size_t i = 0; i < m; ++i) ++counts[outcomes[i]];
  return ObservationEvent(alphabet, std::move(counts));
}

ObservationStream sample_stream(const MassFunction& truth, std::size_t length,
                                std::uint64_t seed) {
  if (length == 0) {
    throw Error(ErrorCode::InvalidArgument, "stream length must be >= 1");
  }
  std::vector<double> cumulative;
  cumulative.reserve(truth.size());
  Rational running = 0;
  for (const auto& w : truth.weights()) {
    running += w;
    cumulative.push_back(running.get_d());
  }

  std::mt19937_64 rng(seed);
  ObservationStream stream{truth.alphabet(), {}, seed};
  stream.outcomes.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    std::uint32_t pick = 0;
    while (!(u < cumulative[pick])) ++pick;
    stream.outcomes.push_back(pick);
  }
  return stream;
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
  return splitmix64(base_seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

}  // namespace doxa
