// Acceptance run: one PASS/FAIL line per criterion; exits 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"

#include "doxa/axioms.hpp"
#include "doxa/checker.hpp"
#include "doxa/convergence.hpp"
#include "doxa/parser.hpp"
#include "doxa/stream.hpp"

using namespace doxa;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  /// Seconds spent in the timed part; compared against the budget.
  double seconds = 0.0;
};

class Stopwatch {
 public:
  void start() { t0_ = Clock::now(); }
  void stop() { total_ += std::chrono::duration<double>(Clock::now() - t0_).count(); }
  double seconds() const { return total_; }

 private:
  Clock::time_point t0_;
  double total_ = 0.0;
};

bool same_bits(std::span<const double> a, std::span<const double> b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

// 1. Three heads on the entropy coin grid.
Outcome hhh_ordering() {
  Outcome r;
  Stopwatch sw;
  sw.start();
  const Model m = fx::coin_grid_model(20);
  const auto a = m.alphabet();
  const PlausibilityState s = condition(m.state(), ObservationEvent(a, {3, 0}));
  sw.stop();
  r.seconds = sw.seconds();

  double worst = 0.0;
  for (std::size_t k = 0; k <= 20; ++k) {
    const double h = static_cast<double>(k) / 20.0;
    const double expect = oracle::entropy({h, 1 - h}) * oracle::likelihood({h, 1 - h}, {3, 0});
    const double got = s.value(k);
    if (expect == 0.0) {
      r.ok = r.ok && got == 0.0;
    } else {
      worst = std::max(worst, std::abs(got - expect) / expect);
    }
  }
  const double p75 = s.value(15), p80 = s.value(16), p90 = s.value(18);
  r.ok = r.ok && worst <= 1e-12 && p75 < p80 && p80 > p90 && r.seconds < 1e-3;
  r.detail = "pla(0.75)=" + fmt(p75) + " < pla(0.8)=" + fmt(p80) + " > pla(0.9)=" + fmt(p90) +
             ", max rel err " + fmt(worst);
  return r;
}

// 2. Prior belief in the fair coin.
Outcome fair_coin_belief() {
  Outcome r;
  double slowest = 0.0;
  std::size_t grids = 0;
  for (int N = 2; N <= 40; N += 2) {
    Stopwatch sw;
    sw.start();
    const Model m = fx::coin_grid_model(N);
    const std::size_t eq = fx::coin_index(m, N / 2, N);
    const bool holds = belief_holds(m.frame(), Proposition::of(m.size(), {eq}));
    sw.stop();
    slowest = std::max(slowest, sw.seconds());
    r.ok = r.ok && holds;
    ++grids;
  }
  r.seconds = slowest;
  r.ok = r.ok && slowest < 1e-3;
  r.detail = std::to_string(grids) + " even grids N=2..40, slowest " + fmt(slowest * 1e3) + " ms";
  return r;
}

// 3. Conditioning order independence.
Outcome order_independence() {
  Outcome r;
  Rng rng(303);
  const auto sampler = default_sampler();
  std::vector<Model> models;
  std::vector<std::pair<ObservationEvent, ObservationEvent>> events;
  for (int t = 0; t < 1000; ++t) {
    models.push_back(random_model(rng, sampler));
    const auto& a = models.back().alphabet();
    std::vector<std::uint64_t> x(a.size()), y(a.size());
    for (auto& c : x) c = pick(rng, 40);
    for (auto& c : y) c = pick(rng, 40);
    events.emplace_back(ObservationEvent(a, x), ObservationEvent(a, y));
  }
  std::size_t bad = 0;
  Stopwatch sw;
  sw.start();
  for (std::size_t t = 0; t < models.size(); ++t) {
    const auto& s = models[t].state();
    const auto& [e, f] = events[t];
    const auto ef = condition(condition(s, e), f);
    const auto fe = condition(condition(s, f), e);
    const auto batch = condition(s, event_concat(e, f));
    if (!same_bits(ef.log_values(), fe.log_values()) ||
        !same_bits(ef.log_values(), batch.log_values())) {
      ++bad;
    }
  }
  sw.stop();
  r.seconds = sw.seconds();
  r.ok = bad == 0 && r.seconds < 1.0;
  r.detail = "1000 triples, " + std::to_string(bad) + " mismatches";
  return r;
}

// 4. Counts proportional to an interior grid point single it out under a
// constant prior.
Outcome interior_argmax() {
  Outcome r;
  std::size_t cases = 0, bad = 0;
  Stopwatch sw;
  sw.start();
  for (int n : {2, 3}) {
    const auto a = n == 2 ? fx::coin() : fx::urn();
    for (int N : {4, 8, 12}) {
      const auto grid = simplex_grid(a, N);
      const Model m = make_model(grid, PlausibilityFn::constant(grid.size()));
      const auto points = oracle::compositions(n, N);
      for (const auto& k : points) {
        if (std::find(k.begin(), k.end(), 0) != k.end()) continue;
        for (std::uint64_t mult : {10u, 100u}) {
          std::vector<std::uint64_t> counts;
          for (int ki : k) counts.push_back(mult * static_cast<std::uint64_t>(ki));
          const auto got = argmax_worlds(condition(m.state(), ObservationEvent(a, counts)));

          // Brute force: log-likelihood of the counts at every composition.
          std::vector<double> ll;
          for (const auto& q : points) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) {
              s += q[i] == 0 ? -INFINITY
                             : static_cast<double>(counts[i]) *
                                   std::log(static_cast<double>(q[i]) / N);
            }
            ll.push_back(s);
          }
          double top = -INFINITY;
          for (double x : ll) top = std::max(top, x);
          std::vector<std::size_t> expect;
          for (std::size_t i = 0; i < ll.size(); ++i) {
            if (ll[i] == top) expect.push_back(i);
          }
          const std::size_t self =
              static_cast<std::size_t>(std::find(points.begin(), points.end(), k) - points.begin());
          const auto in_grid = find_world(grid, fx::world(a, k, N));
          const bool ok = expect == std::vector<std::size_t>{self} && in_grid &&
                          got.indices() == std::vector<std::size_t>{*in_grid};
          bad += ok ? 0 : 1;
          ++cases;
        }
      }
    }
  }
  sw.stop();
  r.seconds = sw.seconds();
  r.ok = bad == 0 && cases > 0 && r.seconds < 5.0;
  r.detail = std::to_string(cases) + " (grid, point, m) cases, " + std::to_string(bad) + " wrong";
  return r;
}

// 5. Validity schemas, and the suite's sensitivity to a broken semantics.
Outcome axiom_suite_clean_and_sensitive() {
  Outcome r;
  Stopwatch sw;
  sw.start();
  ValidityConfig cfg;
  cfg.trials = 500;
  cfg.seed = 2024;
  const auto clean = axiom_suite(cfg);
  cfg.check.relativize_announcements = false;
  const auto broken = axiom_suite(cfg);
  sw.stop();
  r.seconds = sw.seconds();
  std::size_t checked = 0;
  for (const auto& s : clean.schemas) checked += s.checked;
  r.ok = clean.total_counterexamples() == 0 && broken.total_counterexamples() >= 1 &&
         r.seconds < 60.0;
  r.detail = std::to_string(clean.schemas.size()) + " schemas, " + std::to_string(checked) +
             " instances checked, " + std::to_string(clean.total_counterexamples()) +
             " counterexamples; mutated: " + std::to_string(broken.total_counterexamples());
  return r;
}

// 6. Belief is never inconsistent.
Outcome belief_consistency() {
  Outcome r;
  Rng rng(606);
  const auto sampler = default_sampler();
  std::size_t both = 0;
  Stopwatch sw;
  sw.start();
  for (int t = 0; t < 1000; ++t) {
    const Model m = random_model(rng, sampler);
    const Formula phi = random_formula(rng, m.alphabet(), 1 + pick(rng, 3));
    if (valid_in_model(m, believe(phi)) && valid_in_model(m, believe(neg(phi)))) ++both;
  }
  sw.stop();
  r.seconds = sw.seconds();
  r.ok = both == 0 && r.seconds < 30.0;
  r.detail = "1000 models, " + std::to_string(both) + " with B phi and B ~phi";
  return r;
}

// 7. Three candidate coins, the truth among them.
Outcome finite_settling() {
  Outcome r;
  std::vector<MassFunction> ws = {fx::coin_world(3, 10), fx::coin_world(5, 10),
                                  fx::coin_world(7, 10)};
  const MassFunction truth = ws[2];
  TrialConfig cfg{make_model(ws, PlausibilityFn::constant(3)), truth,
                  isolating_epsilon(truth, ws), 500};
  std::size_t settled = 0, wrong_argmax = 0;
  Stopwatch sw;
  sw.start();
  for (std::size_t i = 0; i < 200; ++i) {
    cfg.seed = derive_seed(707, i);
    const auto t = run_trial(cfg);
    if (!t.settled) continue;
    ++settled;
    if (t.final_argmax.indices() != std::vector<std::size_t>{2}) ++wrong_argmax;
  }
  sw.stop();
  r.seconds = sw.seconds();
  const double fraction = static_cast<double>(settled) / 200.0;
  r.ok = fraction >= 0.99 && wrong_argmax == 0 && r.seconds < 5.0;
  r.detail = "settle_fraction " + fmt(fraction) + ", argmax other than {0.7} in " +
             std::to_string(wrong_argmax) + " settled trials";
  return r;
}

double fraction_for(const TrialConfig& cfg, std::uint64_t seed) {
  return run_experiment(cfg, 200, seed).learner.settle_fraction;
}

// 8. Urn grid learning, with a longer horizon as a check.
Outcome urn_learning() {
  Outcome r;
  const auto a = fx::urn();
  Stopwatch sw;
  sw.start();
  TrialConfig cfg{make_model(simplex_grid(a, 10), PlausibilityFn::entropy()),
                  fx::world(a, {5, 3, 2}, 10), 0.15, 3000};
  const double f3 = fraction_for(cfg, 42);
  cfg.horizon = 10000;
  const double f10 = fraction_for(cfg, 42);
  sw.stop();
  r.seconds = sw.seconds();
  r.ok = f3 >= 0.95 && f10 >= f3 && r.seconds < 120.0;
  r.detail = "settle_fraction " + fmt(f3) + " at 3000, " + fmt(f10) + " at 10000";
  return r;
}

// 9. Printer and parser agree.
Outcome parser_round_trip() {
  Outcome r;
  const auto coin = fx::coin();
  struct Golden {
    const char* text;
    const char* printed;
  };
  // One entry per grammar production.
  const std::vector<Golden> goldens = {
      {"T", "T"},
      {"(T)", "T"},
      {"w(H) >= 1/2", "w(H) >= 1/2"},
      {"w(H) <= 1/3", "-w(H) >= -1/3"},
      {"w(H) = 1/2", "w(H) >= 1/2 & -w(H) >= -1/2"},
      {"w(H) > 1/2", "~-w(H) >= -1/2"},
      {"w(H) < 1/2", "~w(H) >= 1/2"},
      {"2*w(H) - 3/2*w(T) >= -1", "2*w(H) - 3/2*w(T) >= -1"},
      {"w(H) >= 0.55", "w(H) >= 11/20"},
      {"w(H) + 1/4 >= w(T) - 1", "w(H) - w(T) >= -5/4"},
      {"~T", "~T"},
      {"K w(H) >= 0", "K w(H) >= 0"},
      {"B w(H) >= 0", "B w(H) >= 0"},
      {"B(w(H) >= 0 | H,T,H)", "B(w(H) >= 0 | H,T,H)"},
      {"B(w(H) >= w(T) | w(H) >= 1/4)", "B(w(H) - w(T) >= 0 | w(H) >= 1/4)"},
      {"[H,T] T", "[H,T] T"},
      {"[w(H) >= 1/2] K T", "[w(H) >= 1/2] K T"},
      {"w(H) >= 0 & w(T) >= 0 | T", "w(H) >= 0 & w(T) >= 0 | T"},
      {"w(H) >= 0 -> T", "~w(H) >= 0 | T"},
  };
  std::size_t bad = 0;
  for (const auto& g : goldens) {
    const Formula f = parse_formula(g.text, coin);
    if (print_formula(f) != g.printed || parse_formula(g.printed, coin) != f) ++bad;
  }

  Rng rng(909);
  const auto sampler = default_sampler();
  Stopwatch sw;
  sw.start();
  for (int t = 0; t < 10000; ++t) {
    const auto& a = sampler.alphabets[pick(rng, sampler.alphabets.size())];
    const Formula f = random_formula(rng, a, 1 + pick(rng, 5));
    const Formula g = parse_formula(print_formula(f), a);
    if (g != f || parse_formula(print_formula(g), a) != g) ++bad;
  }
  sw.stop();
  r.seconds = sw.seconds();
  r.ok = bad == 0 && r.seconds < 10.0;
  r.detail = std::to_string(goldens.size()) + " goldens + 10000 random formulas, " +
             std::to_string(bad) + " failures";
  return r;
}

// 10. What each kind of update may change.
Outcome update_contract() {
  Outcome r;
  Rng rng(1010);
  const auto sampler = default_sampler();
  std::size_t bad = 0;
  Stopwatch sw;
  sw.start();
  for (int t = 0; t < 500; ++t) {
    const Model m = random_model(rng, sampler);
    std::vector<std::uint64_t> counts(m.alphabet().size());
    for (auto& c : counts) c = pick(rng, 6);
    const Model sampled = update_sampling(m, ObservationEvent(m.alphabet(), counts));
    if (sampled.worlds() != m.worlds()) ++bad;

    Proposition p(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (pick(rng, 2)) p.insert(i);
    }
    if (p.empty()) p.insert(pick(rng, m.size()));
    const Model announced = update_proposition(m, p);
    // P, read in the updated model: the worlds that were in P before.
    Proposition p_after(announced.size());
    for (std::size_t i = 0; i < announced.size(); ++i) {
      const auto before = find_world(m.worlds(), announced.worlds()[i]);
      if (before && p.contains(*before)) p_after.insert(i);
    }
    if (!knowledge_holds(announced.frame(), p_after) || announced.size() != p.count()) ++bad;
  }
  sw.stop();
  r.seconds = sw.seconds();
  r.ok = bad == 0 && r.seconds < 10.0;
  r.detail = "500 models, " + std::to_string(bad) + " violations";
  return r;
}

// Nested grids N=5,10,20 around a truth on all three.
Outcome grid_refinement() {
  Outcome r;
  const auto a = fx::urn();
  const MassFunction truth = fx::world(a, {2, 2, 1}, 5);
  std::vector<double> fractions;
  Stopwatch sw;
  sw.start();
  for (int N : {5, 10, 20}) {
    const TrialConfig cfg{make_model(simplex_grid(a, N), PlausibilityFn::entropy()), truth, 0.15,
                          3000};
    fractions.push_back(fraction_for(cfg, 4242));
  }
  sw.stop();
  r.seconds = sw.seconds();
  r.ok = fractions[1] >= fractions[0] && fractions[2] >= fractions[1];
  r.detail = "truth (2/5,2/5,1/5), eps 0.15, horizon 3000: settle_fraction " + fmt(fractions[0]) +
             " / " + fmt(fractions[1]) + " / " + fmt(fractions[2]) + " for N = 5 / 10 / 20";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    double budget;  // seconds; 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1", "three-heads plausibility ordering", 1e-3, hhh_ordering},
      {"2", "initial belief in the fair coin", 1e-3, fair_coin_belief},
      {"3", "conditioning order independence", 1.0, order_independence},
      {"4", "interior-point argmax under a constant prior", 5.0, interior_argmax},
      {"5", "axiom suite clean, mutation detected", 60.0, axiom_suite_clean_and_sensitive},
      {"6", "belief consistency", 30.0, belief_consistency},
      {"7", "settling on a finite world set", 5.0, finite_settling},
      {"8", "learning on the urn grid", 120.0, urn_learning},
      {"9", "parser round trip", 10.0, parser_round_trip},
      {"10", "sampling vs propositional update", 10.0, update_contract},
      {"R", "grid refinement does not degrade settling", 0.0, grid_refinement},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::string budget = c.budget > 0 ? " (limit " + fmt(c.budget) + " s)" : "";
    std::printf("%s [%2s] %-46s %9.4f s%s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.seconds,
                budget.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
