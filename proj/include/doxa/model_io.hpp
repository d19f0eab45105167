#ifndef DOXA_MODEL_IO_HPP
#define DOXA_MODEL_IO_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doxa/doxastic.hpp"

namespace doxa {

/// On-disk form of a model. Exactly one of grid_resolution and worlds is set.
///
///   {"alphabet": ["H","T"],
///    "grid_resolution": 10,              or "worlds": [[[1,2],[1,2]], ...],
///    "plausibility": "entropy" | "centre_of_mass" | "uniform"
///                    | {"table": {"0": 1.5, ...}},
///    "conditioned_on": [3, 1]}           optional, counts per outcome
struct ModelFile {
  std::vector<std::string> alphabet;
  std::optional<std::size_t> grid_resolution;
  std::optional<std::vector<MassFunction>> worlds;
  /// "entropy", "centre_of_mass", "uniform" or "table".
  std::string plausibility = "entropy";
  std::map<std::size_t, double> table;
  std::optional<std::vector<std::uint64_t>> conditioned_on;
};

/// Parses model JSON. `source` names the input in error messages, which read
/// "<source>:<line>: <reason>" and carry ErrorCode::ModelFormat.
ModelFile parse_model_file(std::string_view text, std::string_view source);

/// Builds the model a file describes. Errors from the core modules are
/// rethrown as ModelFormat with the source prefix.
Model build_model(const ModelFile& file, std::string_view source = "<model>");

Model load_model(const std::filesystem::path& path);

/// Pretty-printed JSON with a trailing newline. Worlds are written as
/// [numerator, denominator] pairs.
std::string model_file_to_json(const ModelFile& file);

/// Tabulated plausibility file: a JSON object from world index to a
/// non-negative number.
std::map<std::size_t, double> parse_table(std::string_view text,
                                          std::string_view source);
std::map<std::size_t, double> load_table(const std::filesystem::path& path);

/// Reads a whole file; throws ModelFormat naming the path on failure.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace doxa

#endif  // DOXA_MODEL_IO_HPP
