#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "doxa/axioms.hpp"
#include "doxa/checker.hpp"
#include "doxa/convergence.hpp"
#include "doxa/error.hpp"
#include "doxa/model_io.hpp"
#include "doxa/parser.hpp"
#include "doxa/simplex.hpp"

namespace doxa::cli {

namespace {

using nlohmann::ordered_json;

// Thrown for bad flag values and unreadable or unwritable files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return parts;
}

ordered_json world_json(const MassFunction& w) {
  ordered_json coords = ordered_json::array();
  for (const auto& r : w.weights()) coords.push_back(format_rational(r));
  return coords;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << content) || !f.flush()) {
    throw UsageError(path + ": cannot write file");
  }
}

// ---------------------------------------------------------------- grid

struct GridArgs {
  std::string alphabet;
  std::size_t resolution = 0;
  std::string plausibility = "entropy";
  std::string table;
  std::string output;
};

int run_grid(const GridArgs& a, std::ostream& out) {
  ModelFile file;
  file.alphabet = split_commas(a.alphabet);
  const OutcomeAlphabet alphabet = make_alphabet(file.alphabet);
  file.worlds = simplex_grid(alphabet, a.resolution);
  file.plausibility = a.plausibility;
  if (a.plausibility == "table") {
    if (a.table.empty()) throw UsageError("--plausibility table needs --table FILE");
    file.table = load_table(a.table);
  } else if (!a.table.empty()) {
    throw UsageError("--table is only valid with --plausibility table");
  }
  build_model(file, a.output.empty() ? "<grid>" : a.output);
  const std::string text = model_file_to_json(file);
  if (a.output.empty()) {
    out << text;
  } else {
    write_file(a.output, text);
    out << "wrote " << file.worlds->size() << " worlds to " << a.output << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string model;
  std::string formula;
  std::string format = "table";
  std::optional<std::size_t> explain;
};

int run_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const Model model = load_model(a.model);
  std::optional<Formula> parsed;
  try {
    parsed = parse_formula(a.formula, model.alphabet());
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n  " << a.formula << "\n  "
        << std::string(e.position(), ' ') << "^\n";
    return kExitUsage;
  }
  const Formula& f = *parsed;
  if (a.explain && *a.explain >= model.size()) {
    throw UsageError("--explain: world index " + std::to_string(*a.explain) +
                     " out of range (model has " + std::to_string(model.size()) +
                     " worlds)");
  }

  const Proposition ext = extension(model, f);
  const bool valid = ext.is_full();
  std::optional<CheckResult> trace;
  if (a.explain) trace = check_world(model, *a.explain, f, true);

  if (a.format == "json") {
    ordered_json doc;
    doc["formula"] = print_formula(f);
    ordered_json worlds = ordered_json::array();
    for (std::size_t i = 0; i < model.size(); ++i) {
      worlds.push_back({{"index", i},
                        {"world", world_json(model.worlds()[i])},
                        {"verdict", ext.contains(i)}});
    }
    doc["worlds"] = std::move(worlds);
    doc["satisfied"] = ext.count();
    doc["total"] = model.size();
    doc["valid"] = valid;
    if (trace) {
      ordered_json steps = ordered_json::array();
      for (const auto& t : trace->trace) {
        steps.push_back({{"subformula", t.subformula}, {"verdict", t.verdict}});
      }
      doc["explain"] = {{"world", trace->world}, {"trace", std::move(steps)}};
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "formula: " << print_formula(f) << "\n";
    for (std::size_t i = 0; i < model.size(); ++i) {
      out << std::setw(5) << i << "  " << std::left << std::setw(28)
          << model.worlds()[i].to_string() << std::right << "  "
          << (ext.contains(i) ? "true" : "false") << "\n";
    }
    out << "valid: " << (valid ? "true" : "false") << " (" << ext.count() << "/"
        << model.size() << " worlds)\n";
    if (trace) {
      out << "explain world " << trace->world << ":\n";
      for (const auto& t : trace->trace) {
        out << "  " << (t.verdict ? "true " : "false") << "  " << t.subformula
            << "\n";
      }
    }
  }
  return valid ? kExitOk : kExitFalse;
}

// ---------------------------------------------------------------- axioms

struct AxiomArgs {
  std::size_t trials = 500;
  std::uint64_t seed = 0;
  std::size_t depth = 3;
  std::string only;
  bool mutate = false;
  std::string format = "table";
};

int run_axioms(const AxiomArgs& a, std::ostream& out) {
  ValidityConfig config;
  config.trials = a.trials;
  config.seed = a.seed;
  config.depth = a.depth;
  config.only = a.only;
  config.check.relativize_announcements = !a.mutate;
  const ValidityReport report = axiom_suite(config);
  if (report.schemas.empty()) {
    throw UsageError("--only \"" + a.only + "\" matches no schema");
  }
  const std::size_t failures = report.total_counterexamples();

  if (a.format == "json") {
    ordered_json doc;
    doc["trials"] = a.trials;
    doc["seed"] = a.seed;
    doc["depth"] = a.depth;
    doc["mutated"] = a.mutate;
    ordered_json schemas = ordered_json::array();
    for (const auto& s : report.schemas) {
      schemas.push_back({{"name", s.name},
                         {"group", s.group},
                         {"checked", s.checked},
                         {"skipped", s.skipped},
                         {"counterexamples", s.counterexamples}});
    }
    doc["schemas"] = std::move(schemas);
    ordered_json cex = ordered_json::array();
    for (const auto& c : report.counterexamples) {
      cex.push_back({{"schema", c.schema},
                     {"instance", c.instance},
                     {"world", c.world},
                     {"world_weights", c.world_text},
                     {"model", c.model}});
    }
    doc["counterexamples"] = std::move(cex);
    doc["total_counterexamples"] = failures;
    out << doc.dump(2) << "\n";
  } else {
    std::size_t width = 6;
    for (const auto& s : report.schemas) width = std::max(width, s.name.size());
    width += 2;
    out << std::left << std::setw(static_cast<int>(width)) << "schema"
        << std::setw(9) << "group"
        << std::right << std::setw(8) << "checked" << std::setw(9) << "skipped"
        << std::setw(8) << "failed" << "\n";
    for (const auto& s : report.schemas) {
      out << std::left << std::setw(static_cast<int>(width)) << s.name << std::setw(9) << s.group
          << std::right << std::setw(8) << s.checked << std::setw(9)
          << s.skipped << std::setw(8) << s.counterexamples << "\n";
    }
    for (const auto& c : report.counterexamples) {
      out << "\ncounterexample to " << c.schema << "\n  instance: "
          << c.instance << "\n  fails at world " << c.world << " "
          << c.world_text << "\n";
      std::istringstream lines(c.model);
      for (std::string line; std::getline(lines, line);) {
        out << "  | " << line << "\n";
      }
    }
    out << "total counterexamples: " << failures << "\n";
  }
  return failures == 0 ? kExitOk : kExitFalse;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string model;
  std::string truth;
  std::optional<double> eps;
  std::size_t horizon = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  bool baseline = false;
  std::string trace;
};

ordered_json stats_json(const SettleStats& s) {
  auto opt = [](const std::optional<std::size_t>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  return {{"trials", s.trials},
          {"settled", s.settled},
          {"settle_fraction", s.settle_fraction},
          {"settle_time_median", opt(s.median)},
          {"settle_time_p90", opt(s.p90)},
          {"settle_time_max", opt(s.max)}};
}

int run_simulate(const SimulateArgs& a, std::ostream& out) {
  const Model model = load_model(a.model);
  std::vector<Rational> weights;
  for (const auto& part : split_commas(a.truth)) {
    try {
      weights.push_back(parse_rational(part));
    } catch (const Error&) {
      throw UsageError("--truth: \"" + part + "\" is not a rational number");
    }
  }
  const MassFunction truth = mass_function(model.alphabet(), std::move(weights));

  TrialConfig config{model, truth};
  config.epsilon = a.eps ? *a.eps : isolating_epsilon(truth, model.worlds());
  config.horizon = a.horizon;
  const ExperimentSummary summary =
      run_experiment(config, a.trials, a.seed, a.baseline);

  ordered_json doc;
  doc["model"] = a.model;
  doc["truth"] = world_json(truth);
  doc["epsilon"] = config.epsilon;
  doc["horizon"] = a.horizon;
  doc["seed"] = a.seed;
  const Proposition ball = epsilon_ball(truth, config.epsilon, model.worlds());
  doc["ball_worlds"] = ball.count();
  doc["learner"] = stats_json(summary.learner);
  doc["settle_fraction"] = summary.learner.settle_fraction;
  if (summary.baseline) doc["baseline"] = stats_json(*summary.baseline);
  out << doc.dump(2) << "\n";

  if (!a.trace.empty()) {
    std::ostringstream csv;
    csv << "trial,settled,settle_time,baseline_settle_time\n";
    for (std::size_t i = 0; i < summary.records.size(); ++i) {
      const auto& r = summary.records[i];
      csv << i << "," << (r.settled ? 1 : 0) << ",";
      if (r.settle_time) csv << *r.settle_time;
      csv << ",";
      if (r.baseline_settle_time) csv << *r.baseline_settle_time;
      csv << "\n";
    }
    write_file(a.trace, csv.str());
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Probabilistic plausibility models: build, check, fuzz, simulate",
               "doxa"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  GridArgs grid;
  auto* g = app.add_subcommand("grid", "Write a model file over a simplex grid");
  g->add_option("--alphabet", grid.alphabet, "Comma-separated outcome names")
      ->required();
  g->add_option("--resolution", grid.resolution, "Grid resolution N >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  g->add_option("--plausibility", grid.plausibility, "Plausibility map")
      ->check(CLI::IsMember({"entropy", "centre_of_mass", "uniform", "table"}))
      ->capture_default_str();
  g->add_option("--table", grid.table, "JSON map world index -> plausibility")
      ->check(CLI::ExistingFile);
  g->add_option("-o,--output", grid.output, "Output path (default stdout)");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Evaluate a formula at every world");
  c->add_option("--model", check.model, "Model JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  c->add_option("--formula", check.formula, "Formula text")->required();
  c->add_option("--format", check.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  c->add_option("--explain", check.explain,
                "Print the subformula trace at this world index");
  c->footer("Formula grammar (EBNF):\n" + std::string(kFormulaGrammar));

  AxiomArgs axioms;
  auto* x = app.add_subcommand("axioms", "Fuzz the validity schemas on random models");
  x->add_option("--trials", axioms.trials, "Instances per schema")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  x->add_option("--seed", axioms.seed, "Base seed")->capture_default_str();
  x->add_option("--depth", axioms.depth, "Maximum depth of sampled subformulas")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  x->add_option("--only", axioms.only, "Only schemas whose name contains this");
  x->add_flag("--mutate", axioms.mutate,
              "Drop the announcement guard (the suite should then fail)");
  x->add_option("--format", axioms.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Monte Carlo learning experiment");
  s->add_option("--model", sim.model, "Model JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  s->add_option("--truth", sim.truth, "True distribution, e.g. 7/10,3/10")
      ->required();
  s->add_option("--eps", sim.eps,
                "Ball radius (default: half the distance to the nearest other world)")
      ->check(CLI::PositiveNumber);
  s->add_option("--horizon", sim.horizon, "Observations per trial")
      ->required()
      ->check(CLI::PositiveNumber);
  s->add_option("--trials", sim.trials, "Number of trials")
      ->required()
      ->check(CLI::PositiveNumber);
  s->add_option("--seed", sim.seed, "Base seed")->required();
  s->add_flag("--baseline", sim.baseline, "Also run the Bayesian learner");
  s->add_option("--trace", sim.trace, "Per-trial CSV output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (g->parsed()) return run_grid(grid, out);
    if (c->parsed()) return run_check(check, out, err);
    if (x->parsed()) return run_axioms(axioms, out);
    return run_simulate(sim, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace doxa::cli
