#ifndef DOXA_AXIOMS_HPP
#define DOXA_AXIOMS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "doxa/checker.hpp"
#include "doxa/doxastic.hpp"
#include "doxa/formula.hpp"

namespace doxa {

using Rng = std::mt19937_64;

/// Uniform index in [0, n), n > 0. Defined on raw generator output so that
/// results do not depend on the standard library's distributions.
std::size_t pick(Rng& rng, std::size_t n);

struct ModelSamplerConfig {
  /// Defaults to the coin {H,T} and the urn {R,B,G}.
  std::vector<OutcomeAlphabet> alphabets;
  std::size_t max_resolution = 6;
  std::size_t max_worlds = 8;
  /// Largest per-outcome count of the event a sampled model is
  /// pre-conditioned on (0 disables pre-conditioning).
  std::uint64_t max_precondition_count = 2;
};

ModelSamplerConfig default_sampler();

/// Random finite model: a random subset of a random grid with an entropy,
/// centre-of-mass or small-integer tabulated plausibility, optionally
/// conditioned on a small event.
Model random_model(Rng& rng, const ModelSamplerConfig& config);

/// Random formula of depth <= `depth` over the alphabet, using every node
/// kind of the language.
Formula random_formula(Rng& rng, const OutcomeAlphabet& alphabet,
                       std::size_t depth);

/// Random atom: T or a linear inequality.
Formula random_atom(Rng& rng, const OutcomeAlphabet& alphabet);

/// Multi-line description of a model (alphabet, worlds, plausibility,
/// pre-conditioning event).
std::string describe_model(const Model& model);

struct SchemaInstance {
  Formula formula;
  /// When set, the instance only has to be valid in models where the
  /// premise is valid.
  std::optional<Formula> premise;
};

struct Schema {
  std::string name;
  /// Group the schema belongs to: "static", "agm" or "dynamic".
  std::string group;
  std::function<SchemaInstance(Rng&, const OutcomeAlphabet&, std::size_t depth)>
      instantiate;
};

/// Every validity schema for the static operators, the higher-order update
/// and the observation update.
const std::vector<Schema>& validity_schemas();

struct ValidityConfig {
  ModelSamplerConfig sampler = default_sampler();
  std::size_t depth = 3;
  std::size_t trials = 500;
  std::uint64_t seed = 0;
  CheckOptions check;
  /// Restrict to schemas whose name contains this text (empty = all).
  std::string only;
};

struct Counterexample {
  std::string schema;
  std::string instance;
  std::string model;
  std::size_t world = 0;
  std::string world_text;
};

struct SchemaStats {
  std::string name;
  std::string group;
  std::size_t checked = 0;
  /// Instances whose premise failed in the sampled model.
  std::size_t skipped = 0;
  std::size_t counterexamples = 0;
};

struct ValidityReport {
  std::vector<SchemaStats> schemas;
  /// First few counterexamples of each schema.
  std::vector<Counterexample> counterexamples;

  std::size_t total_counterexamples() const;
};

ValidityReport axiom_suite(const ValidityConfig& config);

}  // namespace doxa

#endif  // DOXA_AXIOMS_HPP
