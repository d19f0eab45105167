#include "doxa/axioms.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "doxa/detail/parallel.hpp"
#include "doxa/parser.hpp"
#include "doxa/simplex.hpp"
#include "doxa/stream.hpp"

namespace doxa {

namespace {

constexpr std::size_t kStoredCounterexamplesPerSchema = 5;

Formula weight_sum_is_one(const OutcomeAlphabet& alphabet) {
  std::vector<ast::Term> up, down;
  for (const auto& name : alphabet.names()) {
    up.push_back({Rational(1), name});
    down.push_back({Rational(-1), name});
  }
  return conj(lin(up, 1), lin(down, -1));
}

std::string random_outcome(Rng& rng, const OutcomeAlphabet& alphabet) {
  return alphabet.name(pick(rng, alphabet.size()));
}

std::vector<std::string> random_obs(Rng& rng, const OutcomeAlphabet& alphabet) {
  std::vector<std::string> obs;
  const std::size_t len = 1 + pick(rng, 2);
  for (std::size_t i = 0; i < len; ++i) obs.push_back(random_outcome(rng, alphabet));
  return obs;
}

// A formula equivalent to f in every model, built by a random rewrite.
Formula equivalent_variant(Rng& rng, const OutcomeAlphabet& alphabet,
                           std::size_t depth, const Formula& f) {
  switch (pick(rng, 5)) {
    case 0: return neg(neg(f));
    case 1: return conj(f, top());
    case 2: return disj(f, f);
    case 3: return conj(f, f);
    default: {
      Formula g = random_formula(rng, alphabet, depth);
      return disj(conj(f, g), conj(f, neg(g)));
    }
  }
}

SchemaInstance plain(Formula f) { return {std::move(f), std::nullopt}; }

std::vector<Schema> build_schemas() {
  using A = const OutcomeAlphabet&;
  auto phi = [](Rng& r, A a, std::size_t d) { return random_formula(r, a, d); };
  std::vector<Schema> s;

  // Static operators: the weight axioms, S5 for K, KD45 for B, K -> B.
  s.push_back({"w(o) >= 0", "static", [](Rng& r, A a, std::size_t) {
                 return plain(weight_at_least(random_outcome(r, a), 0));
               }});
  s.push_back({"sum_o w(o) = 1", "static", [](Rng&, A a, std::size_t) {
                 return plain(weight_sum_is_one(a));
               }});
  s.push_back({"K(phi -> theta) -> (K phi -> K theta)", "static",
               [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d), t = phi(r, a, d);
                 return plain(implies(know(implies(p, t)),
                                      implies(know(p), know(t))));
               }});
  s.push_back({"K phi -> phi", "static", [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d);
                 return plain(implies(know(p), p));
               }});
  s.push_back({"K phi -> K K phi", "static", [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d);
                 return plain(implies(know(p), know(know(p))));
               }});
  s.push_back({"~K phi -> K ~K phi", "static", [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d);
                 return plain(implies(neg(know(p)), know(neg(know(p)))));
               }});
  s.push_back({"B(phi -> theta) -> (B phi -> B theta)", "static",
               [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d), t = phi(r, a, d);
                 return plain(implies(believe(implies(p, t)),
                                      implies(believe(p), believe(t))));
               }});
  s.push_back({"K phi -> B phi", "static", [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d);
                 return plain(implies(know(p), believe(p)));
               }});
  s.push_back({"B phi -> B B phi", "static", [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d);
                 return plain(implies(believe(p), believe(believe(p))));
               }});
  s.push_back({"~B phi -> B ~B phi", "static", [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d);
                 return plain(implies(neg(believe(p)), believe(neg(believe(p)))));
               }});

  // Conditional belief on propositions behaves as AGM revision.
  s.push_back({"B(phi | phi)", "agm", [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d);
                 return plain(believe_given(p, p));
               }});
  s.push_back({"B(theta | phi) -> (B(xi | phi & theta) <-> B(xi | phi))", "agm",
               [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d), t = phi(r, a, d), x = phi(r, a, d);
                 return plain(implies(believe_given(t, p),
                                      iff(believe_given(x, conj(p, t)),
                                           believe_given(x, p))));
               }});
  s.push_back({"~B(~theta | phi) -> (B(xi | phi & theta) <-> B(theta -> xi | phi))",
               "agm", [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d), t = phi(r, a, d), x = phi(r, a, d);
                 return plain(implies(neg(believe_given(neg(t), p)),
                                      iff(believe_given(x, conj(p, t)),
                                           believe_given(implies(t, x), p))));
               }});
  s.push_back({"valid(phi <-> theta) => (B(xi | phi) <-> B(xi | theta))", "agm",
               [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d);
                 Formula t = equivalent_variant(r, a, d, p);
                 Formula x = phi(r, a, d);
                 return SchemaInstance{
                     iff(believe_given(x, p), believe_given(x, t)), iff(p, t)};
               }});

  // Reduction laws for the two dynamic modalities.
  s.push_back({"[phi]q <-> (phi -> q)", "dynamic", [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d), q = random_atom(r, a);
                 return plain(iff(after_ann(p, q), implies(p, q)));
               }});
  s.push_back({"[o]q <-> q", "dynamic", [](Rng& r, A a, std::size_t) {
                 Formula q = random_atom(r, a);
                 return plain(iff(after_obs(random_obs(r, a), q), q));
               }});
  s.push_back({"[phi]~theta <-> (phi -> ~[phi]theta)", "dynamic",
               [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d), t = phi(r, a, d);
                 return plain(iff(after_ann(p, neg(t)),
                                   implies(p, neg(after_ann(p, t)))));
               }});
  s.push_back({"[o]~theta <-> ~[o]theta", "dynamic", [phi](Rng& r, A a, std::size_t d) {
                 auto o = random_obs(r, a);
                 Formula t = phi(r, a, d);
                 return plain(iff(after_obs(o, neg(t)), neg(after_obs(o, t))));
               }});
  s.push_back({"[phi](theta & xi) <-> ([phi]theta & [phi]xi)", "dynamic",
               [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d), t = phi(r, a, d), x = phi(r, a, d);
                 return plain(iff(after_ann(p, conj(t, x)),
                                   conj(after_ann(p, t), after_ann(p, x))));
               }});
  s.push_back({"[o](theta & xi) <-> ([o]theta & [o]xi)", "dynamic",
               [phi](Rng& r, A a, std::size_t d) {
                 auto o = random_obs(r, a);
                 Formula t = phi(r, a, d), x = phi(r, a, d);
                 return plain(iff(after_obs(o, conj(t, x)),
                                   conj(after_obs(o, t), after_obs(o, x))));
               }});
  s.push_back({"[phi]K theta <-> (phi -> K[phi]theta)", "dynamic",
               [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d), t = phi(r, a, d);
                 return plain(iff(after_ann(p, know(t)),
                                   implies(p, know(after_ann(p, t)))));
               }});
  s.push_back({"[o]K phi <-> K[o]phi", "dynamic", [phi](Rng& r, A a, std::size_t d) {
                 auto o = random_obs(r, a);
                 Formula p = phi(r, a, d);
                 return plain(iff(after_obs(o, know(p)), know(after_obs(o, p))));
               }});
  s.push_back({"[phi]B(theta | xi) <-> (phi -> B([phi]theta | phi & [phi]xi))",
               "dynamic", [phi](Rng& r, A a, std::size_t d) {
                 Formula p = phi(r, a, d), t = phi(r, a, d), x = phi(r, a, d);
                 return plain(iff(after_ann(p, believe_given(t, x)),
                                   implies(p, believe_given(after_ann(p, t),
                                                            conj(p, after_ann(p, x))))));
               }});
  s.push_back({"[o]B(phi | o') <-> B([o]phi | o, o')", "dynamic",
               [phi](Rng& r, A a, std::size_t d) {
                 auto o = random_outcome(r, a), o2 = random_outcome(r, a);
                 Formula p = phi(r, a, d);
                 return plain(iff(after_obs({o}, believe_after(p, {o2})),
                                   believe_after(after_obs({o}, p), {o, o2})));
               }});
  return s;
}

}  // namespace

std::size_t pick(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
}

ModelSamplerConfig default_sampler() {
  ModelSamplerConfig c;
  c.alphabets = {make_alphabet({"H", "T"}), make_alphabet({"R", "B", "G"})};
  return c;
}

Model random_model(Rng& rng, const ModelSamplerConfig& config) {
  const auto& alphabet = config.alphabets.at(pick(rng, config.alphabets.size()));
  const std::size_t resolution = 1 + pick(rng, std::max<std::size_t>(1, config.max_resolution));
  auto grid = simplex_grid(alphabet, resolution);

  std::vector<std::size_t> order(grid.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[pick(rng, i)]);
  const std::size_t limit = std::min(grid.size(), std::max<std::size_t>(1, config.max_worlds));
  order.resize(1 + pick(rng, limit));
  std::sort(order.begin(), order.end());

  std::vector<MassFunction> worlds;
  for (auto i : order) worlds.push_back(grid[i]);

  PlausibilityFn fn;
  switch (pick(rng, 3)) {
    case 0: fn = PlausibilityFn::entropy(); break;
    case 1: fn = PlausibilityFn::centre_of_mass(); break;
    default: {
      std::map<std::size_t, double> table;
      for (std::size_t i = 0; i < worlds.size(); ++i) {
        table.emplace(i, static_cast<double>(pick(rng, 4)));
      }
      fn = PlausibilityFn::tabulated(std::move(table));
    }
  }
  Model model = make_model(std::move(worlds), fn);
  if (config.max_precondition_count > 0 && pick(rng, 2) == 0) {
    std::vector<std::uint64_t> counts(alphabet.size());
    for (auto& c : counts) c = pick(rng, config.max_precondition_count + 1);
    model = update_sampling(model, ObservationEvent(alphabet, std::move(counts)));
  }
  return model;
}

Formula random_atom(Rng& rng, const OutcomeAlphabet& alphabet) {
  if (pick(rng, 6) == 0) return top();
  static const Rational kCoeffs[] = {Rational(1), Rational(-1), Rational(2),
                                     Rational(1, 2), Rational(-3, 2)};
  std::vector<ast::Term> terms;
  const std::size_t count = 1 + pick(rng, 2);
  for (std::size_t i = 0; i < count; ++i) {
    terms.push_back({kCoeffs[pick(rng, 5)], random_outcome(rng, alphabet)});
  }
  Rational bound(static_cast<long>(pick(rng, 9)) - 4, 4);
  return lin(std::move(terms), bound);
}

Formula random_formula(Rng& rng, const OutcomeAlphabet& alphabet,
                       std::size_t depth) {
  if (depth == 0) return random_atom(rng, alphabet);
  const std::size_t d = depth - 1;
  switch (pick(rng, 9)) {
    case 0: return neg(random_formula(rng, alphabet, d));
    case 1: {
      Formula a = random_formula(rng, alphabet, d);
      return conj(a, random_formula(rng, alphabet, d));
    }
    case 2: {
      Formula a = random_formula(rng, alphabet, d);
      return disj(a, random_formula(rng, alphabet, d));
    }
    case 3: return know(random_formula(rng, alphabet, d));
    case 4: {
      Formula body = random_formula(rng, alphabet, d);
      return believe_after(body, random_obs(rng, alphabet));
    }
    case 5: {
      Formula body = random_formula(rng, alphabet, d);
      return believe_given(body, random_formula(rng, alphabet, d));
    }
    case 6: {
      auto obs = random_obs(rng, alphabet);
      return after_obs(std::move(obs), random_formula(rng, alphabet, d));
    }
    case 7: {
      Formula ann = random_formula(rng, alphabet, d);
      return after_ann(ann, random_formula(rng, alphabet, d));
    }
    default: return random_atom(rng, alphabet);
  }
}

std::string describe_model(const Model& model) {
  std::ostringstream out;
  out << "alphabet: {";
  for (std::size_t i = 0; i < model.alphabet().size(); ++i) {
    out << (i ? "," : "") << model.alphabet().name(i);
  }
  out << "}\nworlds:";
  for (std::size_t i = 0; i < model.size(); ++i) {
    out << " " << model.worlds()[i].to_string();
  }
  out << "\nplausibility: ";
  const auto& base = model.state().base();
  switch (base.kind) {
    case PlausibilityKind::Entropy: out << "entropy"; break;
    case PlausibilityKind::CentreOfMass: out << "centre_of_mass"; break;
    case PlausibilityKind::Tabulated:
      out << "table";
      for (const auto& [i, v] : base.table) out << " " << i << ":" << v;
      break;
  }
  out << "\nconditioned_on:";
  for (auto c : model.state().event().counts()) out << " " << c;
  return out.str();
}

const std::vector<Schema>& validity_schemas() {
  static const std::vector<Schema> schemas = build_schemas();
  return schemas;
}

std::size_t ValidityReport::total_counterexamples() const {
  std::size_t n = 0;
  for (const auto& s : schemas) n += s.counterexamples;
  return n;
}

ValidityReport axiom_suite(const ValidityConfig& config) {
  const auto& all = validity_schemas();
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (config.only.empty() || all[i].name.find(config.only) != std::string::npos) {
      chosen.push_back(i);
    }
  }

  struct Outcome {
    bool skipped = false;
    std::optional<Counterexample> failure;
  };
  const std::size_t trials = config.trials;
  std::vector<Outcome> outcomes(chosen.size() * trials);

  detail::parallel_for(outcomes.size(), [&](std::size_t job) {
    const std::size_t which = chosen[job / trials];
    const std::size_t trial = job % trials;
    const Schema& schema = all[which];
    Rng rng(derive_seed(derive_seed(config.seed, which), trial));
    Model model = random_model(rng, config.sampler);
    SchemaInstance inst = schema.instantiate(rng, model.alphabet(), config.depth);
    Outcome& out = outcomes[job];
    if (inst.premise && !valid_in_model(model, *inst.premise, config.check)) {
      out.skipped = true;
      return;
    }
    Proposition ext = extension(model, inst.formula, config.check);
    if (ext.is_full()) return;
    const std::size_t world = (~ext).indices().front();
    out.failure = Counterexample{schema.name, print_formula(inst.formula),
                                 describe_model(model), world,
                                 model.worlds()[world].to_string()};
  });

  ValidityReport report;
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    const Schema& schema = all[chosen[c]];
    SchemaStats stats{schema.name, schema.group};
    std::size_t stored = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const Outcome& o = outcomes[c * trials + t];
      if (o.skipped) {
        ++stats.skipped;
        continue;
      }
      ++stats.checked;
      if (o.failure) {
        ++stats.counterexamples;
        if (stored++ < kStoredCounterexamplesPerSchema) {
          report.counterexamples.push_back(*o.failure);
        }
      }
    }
    report.schemas.push_back(stats);
  }
  return report;
}

}  // namespace doxa
