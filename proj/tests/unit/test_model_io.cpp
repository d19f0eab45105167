#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"

#include "doxa/error.hpp"
#include "doxa/model_io.hpp"

using namespace doxa;

namespace {

std::string error_of(const std::string& text) {
  try {
    build_model(parse_model_file(text, "m.json"), "m.json");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModelFormat);
    return e.what();
  }
  FAIL("expected a ModelFormat error for " << text);
  return {};
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

TEST_CASE("grid model file") {
  const auto f = parse_model_file(
      R"({"alphabet": ["H","T"], "grid_resolution": 10, "plausibility": "entropy"})", "x");
  CHECK(f.alphabet == std::vector<std::string>{"H", "T"});
  CHECK(f.grid_resolution == 10u);
  const auto m = build_model(f);
  CHECK(m.size() == 11);
  CHECK(m.worlds() == simplex_grid(fx::coin(), 10));
}

TEST_CASE("explicit worlds, uniform plausibility and conditioning") {
  const auto f = parse_model_file(R"({
    "alphabet": ["H","T"],
    "worlds": [[[3,10],[7,10]], [[1,2],"1/2"], [1, 0]],
    "plausibility": "uniform",
    "conditioned_on": [2, 1]
  })",
                                  "x");
  const auto m = build_model(f);
  REQUIRE(m.size() == 3);
  CHECK(m.worlds()[0] == fx::coin_world(3, 10));
  CHECK(m.worlds()[1] == fx::coin_world(1, 2));
  CHECK(m.worlds()[2] == fx::coin_world(1, 1));
  CHECK(m.state().event().counts() == std::vector<std::uint64_t>{2, 1});
  // Uniform prior: the argmax is the maximum-likelihood world for HHT.
  CHECK(argmax_worlds(m.state()).indices() == std::vector<std::size_t>{1});
}

TEST_CASE("tabulated plausibility") {
  const auto f = parse_model_file(
      R"({"alphabet": ["H","T"], "grid_resolution": 2, "plausibility": {"table": {"0": 1, "1": 0.5, "2": 3}}})",
      "x");
  CHECK(f.plausibility == "table");
  CHECK(f.table == std::map<std::size_t, double>{{0, 1.0}, {1, 0.5}, {2, 3.0}});
  CHECK(argmax_worlds(build_model(f).state()).indices() == std::vector<std::size_t>{2});
  CHECK(parse_table(R"({"0": 2, "3": 0})", "t") == std::map<std::size_t, double>{{0, 2.0}, {3, 0.0}});
}

TEST_CASE("errors name the source and line") {
  CHECK(starts_with(error_of("{\n\"alphabet\": [\"H\",\"T\"],\n\"grid_resolution\": 4,\n}"),
                    "m.json:4:"));
  CHECK(starts_with(error_of("{\"alphabet\": [\"H\",\"T\"],\n\"grid_resolution\": 4,\n\"colour\": 1}"),
                    "m.json:3: unknown key \"colour\""));
  CHECK(starts_with(error_of("{\"alphabet\": [\"H\",\"T\"]}"), "m.json:1:"));
  CHECK(error_of(R"({"alphabet": ["H","T"], "grid_resolution": 2, "worlds": []})")
            .find("grid_resolution") != std::string::npos);
  CHECK(starts_with(error_of("{\"alphabet\": [\"H\",\"T\"],\n\"worlds\": [[[1,2],[1,3]]]}"),
                    "m.json:2:"));
  CHECK(starts_with(error_of("{\"alphabet\": [\"H\",\"T\"],\n\"worlds\": [[[1,0],[1,1]]]}"),
                    "m.json:2: zero denominator"));
  CHECK(starts_with(error_of("{\"alphabet\": [\"H\",\"H\"],\n\"grid_resolution\": 1}"),
                    "m.json:1:"));
  CHECK(starts_with(error_of("{\"alphabet\": [\"H\",\"T\"], \"grid_resolution\": 2,\n"
                             "\"plausibility\": \"maximal\"}"),
                    "m.json:2: unknown plausibility"));
  CHECK(starts_with(error_of("{\"alphabet\": [\"H\",\"T\"], \"grid_resolution\": 2,\n"
                             "\"plausibility\": {\"table\": {\"x\": 1}}}"),
                    "m.json:"));
  CHECK(starts_with(error_of("{\"alphabet\": [\"H\",\"T\"], \"grid_resolution\": 2,\n"
                             "\"conditioned_on\": [1]}"),
                    "m.json:"));
  CHECK(starts_with(error_of("[1, 2]"), "m.json:1: model must be a JSON object"));
}

TEST_CASE("missing files") {
  try {
    load_model("/nonexistent/model.json");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModelFormat);
    CHECK(std::string(e.what()).find("/nonexistent/model.json") != std::string::npos);
  }
}

TEST_CASE("property: files round-trip through JSON") {
  std::mt19937_64 rng(71);
  const auto dir = std::filesystem::temp_directory_path() / "doxa_model_io_test";
  std::filesystem::create_directories(dir);
  for (int t = 0; t < 200; ++t) {
    ModelFile f;
    const bool urn = rng() % 2;
    f.alphabet = urn ? std::vector<std::string>{"R", "B", "G"} : std::vector<std::string>{"H", "T"};
    const auto a = make_alphabet(f.alphabet);
    const std::size_t N = 1 + rng() % 6;
    std::size_t count = 0;
    if (rng() % 2) {
      f.grid_resolution = N;
      count = simplex_grid(a, N).size();
    } else {
      std::vector<MassFunction> ws;
      for (const auto& w : simplex_grid(a, N)) {
        if (rng() % 2) ws.push_back(w);
      }
      if (ws.empty()) ws.push_back(simplex_grid(a, N).front());
      count = ws.size();
      f.worlds = ws;
    }
    const char* kinds[] = {"entropy", "centre_of_mass", "uniform", "table"};
    f.plausibility = kinds[rng() % 4];
    if (f.plausibility == "table") {
      for (std::size_t i = 0; i < count; ++i) f.table[i] = double(rng() % 5) / 4.0;
      f.table[rng() % count] = 1.0;
    }
    if (rng() % 2) f.conditioned_on = std::vector<std::uint64_t>(a.size(), rng() % 3);

    const std::string text = model_file_to_json(f);
    const auto path = dir / "m.json";
    std::ofstream(path) << text;
    const auto g = parse_model_file(read_text_file(path), path.string());
    CHECK(g.alphabet == f.alphabet);
    CHECK(g.grid_resolution == f.grid_resolution);
    CHECK(g.worlds == f.worlds);
    CHECK(g.plausibility == f.plausibility);
    CHECK(g.table == f.table);
    CHECK(g.conditioned_on == f.conditioned_on);
    CHECK(model_file_to_json(g) == text);
    const auto m1 = build_model(f), m2 = load_model(path);
    CHECK(m1.worlds() == m2.worlds());
    CHECK(std::equal(m1.state().log_values().begin(), m1.state().log_values().end(),
                     m2.state().log_values().begin()));
  }
  std::filesystem::remove_all(dir);
}
