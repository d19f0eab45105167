#include "doxa/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "doxa/error.hpp"
#include "doxa/simplex.hpp"

namespace doxa {

namespace {

using nlohmann::json;

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

// Line of the first occurrence of "key" in the text, 1 if absent.
std::size_t line_of_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  return pos == std::string_view::npos ? 1 : line_at(text, pos);
}

[[noreturn]] void fail(std::string_view source, std::size_t line,
                       const std::string& reason) {
  throw Error(ErrorCode::ModelFormat, std::string(source) + ":" +
                                          std::to_string(line) + ": " + reason);
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    const auto colon = what.find("syntax error");
    if (colon != std::string::npos) what = what.substr(colon);
    fail(source, line_at(text, offset), what);
  }
}

Rational rational_of(const json& v, std::string_view text,
                     std::string_view source) {
  const std::size_t line = line_of_key(text, "worlds");
  if (v.is_array() && v.size() == 2 && v[0].is_number_integer() &&
      v[1].is_number_integer()) {
    const auto num = v[0].get<std::int64_t>();
    const auto den = v[1].get<std::int64_t>();
    if (den == 0) fail(source, line, "zero denominator in world coordinate");
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
  }
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      fail(source, line, e.what());
    }
  }
  fail(source, line,
       "world coordinate must be a [numerator, denominator] pair, got " +
           v.dump());
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ModelFormat,
                path.string() + ": cannot open file for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ModelFile parse_model_file(std::string_view text, std::string_view source) {
  const json doc = parse_json(text, source);
  if (!doc.is_object()) fail(source, 1, "model must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    static const std::vector<std::string> known = {
        "alphabet", "grid_resolution", "worlds", "plausibility",
        "conditioned_on"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      fail(source, line_of_key(text, key), "unknown key \"" + key + "\"");
    }
  }

  ModelFile file;
  if (!doc.contains("alphabet")) fail(source, 1, "missing key \"alphabet\"");
  const json& alpha = doc["alphabet"];
  if (!alpha.is_array() ||
      !std::all_of(alpha.begin(), alpha.end(),
                   [](const json& v) { return v.is_string(); })) {
    fail(source, line_of_key(text, "alphabet"),
         "\"alphabet\" must be an array of strings");
  }
  for (const auto& v : alpha) file.alphabet.push_back(v.get<std::string>());
  const OutcomeAlphabet alphabet = [&] {
    try {
      return make_alphabet(file.alphabet);
    } catch (const Error& e) {
      fail(source, line_of_key(text, "alphabet"), e.what());
    }
  }();

  const bool has_grid = doc.contains("grid_resolution");
  const bool has_worlds = doc.contains("worlds");
  if (has_grid == has_worlds) {
    fail(source, 1,
         "exactly one of \"grid_resolution\" and \"worlds\" is required");
  }
  if (has_grid) {
    const json& n = doc["grid_resolution"];
    if (!n.is_number_unsigned() || n.get<std::uint64_t>() == 0) {
      fail(source, line_of_key(text, "grid_resolution"),
           "\"grid_resolution\" must be a positive integer");
    }
    file.grid_resolution = n.get<std::size_t>();
  } else {
    const json& ws = doc["worlds"];
    if (!ws.is_array()) {
      fail(source, line_of_key(text, "worlds"), "\"worlds\" must be an array");
    }
    std::vector<MassFunction> worlds;
    for (const json& w : ws) {
      if (!w.is_array()) {
        fail(source, line_of_key(text, "worlds"),
             "each world must be an array of coordinates");
      }
      std::vector<Rational> weights;
      for (const json& c : w) weights.push_back(rational_of(c, text, source));
      try {
        worlds.push_back(mass_function(alphabet, std::move(weights)));
      } catch (const Error& e) {
        fail(source, line_of_key(text, "worlds"), e.what());
      }
    }
    file.worlds = std::move(worlds);
  }

  if (doc.contains("plausibility")) {
    const json& p = doc["plausibility"];
    const std::size_t line = line_of_key(text, "plausibility");
    if (p.is_string()) {
      file.plausibility = p.get<std::string>();
      if (file.plausibility != "entropy" &&
          file.plausibility != "centre_of_mass" &&
          file.plausibility != "uniform") {
        fail(source, line, "unknown plausibility \"" + file.plausibility + "\"");
      }
    } else if (p.is_object() && p.size() == 1 && p.contains("table")) {
      file.plausibility = "table";
      file.table = parse_table(p["table"].dump(), source);
    } else {
      fail(source, line,
           "\"plausibility\" must be \"entropy\", \"centre_of_mass\", "
           "\"uniform\" or {\"table\": {...}}");
    }
  }

  if (doc.contains("conditioned_on")) {
    const json& c = doc["conditioned_on"];
    if (!c.is_array() ||
        !std::all_of(c.begin(), c.end(),
                     [](const json& v) { return v.is_number_unsigned(); })) {
      fail(source, line_of_key(text, "conditioned_on"),
           "\"conditioned_on\" must be an array of non-negative counts");
    }
    file.conditioned_on = c.get<std::vector<std::uint64_t>>();
  }
  return file;
}

Model build_model(const ModelFile& file, std::string_view source) {
  try {
    const OutcomeAlphabet alphabet = make_alphabet(file.alphabet);
    std::vector<MassFunction> worlds =
        file.worlds ? *file.worlds : simplex_grid(alphabet, *file.grid_resolution);
    PlausibilityFn fn;
    if (file.plausibility == "entropy") {
      fn = PlausibilityFn::entropy();
    } else if (file.plausibility == "centre_of_mass") {
      fn = PlausibilityFn::centre_of_mass();
    } else if (file.plausibility == "uniform") {
      fn = PlausibilityFn::constant(worlds.size());
    } else {
      fn = PlausibilityFn::tabulated(file.table);
    }
    Model model = make_model(std::move(worlds), fn);
    if (file.conditioned_on) {
      model = update_sampling(model, ObservationEvent(alphabet, *file.conditioned_on));
    }
    return model;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ModelFormat) throw;
    throw Error(ErrorCode::ModelFormat,
                std::string(source) + ": " + std::string(to_string(e.code())) +
                    ": " + e.what());
  }
}

Model load_model(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  return build_model(parse_model_file(text, path.string()), path.string());
}

std::string model_file_to_json(const ModelFile& file) {
  // Hand-laid so that each world stays on one line.
  std::ostringstream out;
  out << "{\n  \"alphabet\": " << json(file.alphabet).dump() << ",\n";
  if (file.grid_resolution) {
    out << "  \"grid_resolution\": " << *file.grid_resolution << ",\n";
  }
  if (file.worlds) {
    out << "  \"worlds\": [";
    for (std::size_t i = 0; i < file.worlds->size(); ++i) {
      json coords = json::array();
      for (const auto& r : (*file.worlds)[i].weights()) {
        coords.push_back({r.get_num().get_si(), r.get_den().get_si()});
      }
      out << (i == 0 ? "\n    " : ",\n    ") << coords.dump();
    }
    out << "\n  ],\n";
  }
  out << "  \"plausibility\": ";
  if (file.plausibility == "table") {
    json t = json::object();
    for (const auto& [k, v] : file.table) t[std::to_string(k)] = v;
    out << json{{"table", t}}.dump();
  } else {
    out << json(file.plausibility).dump();
  }
  if (file.conditioned_on) {
    out << ",\n  \"conditioned_on\": " << json(*file.conditioned_on).dump();
  }
  out << "\n}\n";
  return out.str();
}

std::map<std::size_t, double> parse_table(std::string_view text,
                                          std::string_view source) {
  const json doc = parse_json(text, source);
  if (!doc.is_object()) fail(source, 1, "plausibility table must be a JSON object");
  std::map<std::size_t, double> table;
  for (const auto& [key, value] : doc.items()) {
    const std::size_t line = line_of_key(text, key);
    const bool digits = !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
      return c >= '0' && c <= '9';
    });
    if (!digits) fail(source, line, "table key \"" + key + "\" is not a world index");
    if (!value.is_number() || value.get<double>() < 0) {
      fail(source, line, "table value for world " + key + " must be a non-negative number");
    }
    table[std::stoull(key)] = value.get<double>();
  }
  return table;
}

std::map<std::size_t, double> load_table(const std::filesystem::path& path) {
  return parse_table(read_text_file(path), path.string());
}

}  // namespace doxa
