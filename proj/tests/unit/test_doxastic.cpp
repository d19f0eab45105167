#include <cstring>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "doxa/axioms.hpp"
#include "doxa/doxastic.hpp"
#include "doxa/error.hpp"

using namespace doxa;

namespace {

Proposition where(const Model& m, const std::function<bool(double)>& pred_h) {
  Proposition p(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (pred_h(m.worlds()[i].probabilities()[0])) p.insert(i);
  }
  return p;
}

Proposition random_prop(Rng& rng, std::size_t n) {
  Proposition p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (pick(rng, 2)) p.insert(i);
  }
  return p;
}

bool same_values(const Model& a, const Model& b) {
  const auto x = a.state().log_values(), y = b.state().log_values();
  return a.worlds() == b.worlds() && x.size() == y.size() &&
         std::memcmp(x.data(), y.data(), x.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("knowledge") {
  const auto m = fx::coin_grid_model(10);
  CHECK(knowledge_holds(m.frame(), Proposition::all(11)));
  CHECK_FALSE(knowledge_holds(m.frame(), Proposition::none(11)));
  CHECK_FALSE(knowledge_holds(m.frame(), where(m, [](double h) { return h >= 0.3; })));
  CHECK(knowledge_holds(m.frame(), where(m, [](double h) { return h >= 0.0; })));
}

TEST_CASE("belief") {
  const auto m = fx::coin_grid_model(10);
  const std::size_t fair = fx::coin_index(m, 1, 2);
  CHECK(belief_holds(m.frame(), Proposition::of(11, {fair})));
  CHECK(belief_holds(m.frame(), Proposition::all(11)));
  CHECK_FALSE(belief_holds(m.frame(), Proposition::of(11, {fx::coin_index(m, 3, 5)})));
  CHECK_FALSE(belief_holds(m.frame(), Proposition::none(11)));
}

TEST_CASE("conditional belief on evidence") {
  const auto m = fx::coin_grid_model(20);
  const auto a = fx::coin();
  std::mt19937_64 gen(1);
  for (int t = 0; t < 50; ++t) {
    Proposition p(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (gen() % 2) p.insert(i);
    }
    CHECK(conditional_belief_event(m.frame(), p, ObservationEvent(a)) ==
          belief_holds(m.frame(), p));
  }

  const ObservationEvent hhh(a, {3, 0});
  // Brute-force argmax of Ent * h^3 over the 21 points.
  std::vector<double> v;
  for (int k = 0; k <= 20; ++k) {
    const double h = k / 20.0;
    v.push_back(oracle::entropy({h, 1 - h}) * oracle::likelihood({h, 1 - h}, {3, 0}));
  }
  CHECK(oracle::argmax(v) == std::vector<std::size_t>{17});
  CHECK(conditional_belief_event(m.frame(), where(m, [](double h) { return h > 0.5; }), hhh));
  CHECK(conditional_belief_event(m.frame(), Proposition::of(21, {17}), hhh));
  CHECK_FALSE(conditional_belief_event(m.frame(), Proposition::of(21, {12}), hhh));
  CHECK_FALSE(conditional_belief_event(m.frame(),
                                       Proposition::of(21, {fx::coin_index(m, 1, 2)}), hhh));
  // The frame itself is untouched.
  CHECK(m.state().event().empty());
}

TEST_CASE("conditional belief on a proposition") {
  const auto m = fx::coin_grid_model(10);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_prop(rng, 11);
    CHECK(conditional_belief_prop(m.frame(), p, Proposition::all(11)) ==
          belief_holds(m.frame(), p));
    const auto q = random_prop(rng, 11) & p;
    CHECK(conditional_belief_prop(m.frame(), p, q));
  }
  const auto q = where(m, [](double h) { return h >= 0.7 - 1e-12; });
  CHECK(conditional_belief_prop(m.frame(), Proposition::of(11, {fx::coin_index(m, 7, 10)}), q));
  CHECK(conditional_belief_prop(m.frame(), Proposition::none(11), Proposition::none(11)));
}

TEST_CASE("sampling update") {
  const auto a = fx::coin();
  const auto m = fx::coin_grid_model(20);
  CHECK(same_values(update_sampling(m, ObservationEvent(a)), m));

  const ObservationEvent e(a, {2, 5}), f(a, {4, 1});
  CHECK(same_values(update_sampling(update_sampling(m, e), f),
                    update_sampling(m, event_concat(e, f))));

  const ObservationEvent big(a, {30, 10});
  const auto u = update_sampling(m, big);
  std::vector<double> v;
  for (int k = 0; k <= 20; ++k) {
    const double h = k / 20.0;
    v.push_back(oracle::entropy({h, 1 - h}) * oracle::likelihood({h, 1 - h}, {30, 10}));
  }
  const auto expect = oracle::argmax(v);
  CHECK(argmax_worlds(u.state()).indices() == expect);
  REQUIRE(expect.size() == 1);
  CHECK(std::abs(expect[0] / 20.0 - 0.75) <= 0.05);
  CHECK(m.state().event().empty());
}

TEST_CASE("propositional update") {
  const auto m = fx::coin_grid_model(10);
  CHECK(same_values(update_proposition(m, Proposition::all(11)), m));

  const auto tails = where(m, [](double h) { return h < 0.5; });
  const auto u = update_proposition(m, tails);
  CHECK(u.size() == 5);
  const auto best = argmax_worlds(u.state()).indices();
  REQUIRE(best.size() == 1);
  CHECK(u.worlds()[best[0]] == fx::coin_world(2, 5));
  CHECK(belief_holds(u.frame(), Proposition::of(5, {best[0]})));
  CHECK_THROWS_AS(update_proposition(m, Proposition::none(11)), Error);
  try {
    update_proposition(m, Proposition::none(11));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyUpdate);
  }
}

TEST_CASE("propositional and sampling updates commute, exhaustively on small grids") {
  struct Case {
    OutcomeAlphabet alphabet;
    std::size_t N;
  };
  for (const auto& c : {Case{fx::coin(), 4}, Case{fx::urn(), 2}}) {
    for (auto fn : {PlausibilityFn::entropy(), PlausibilityFn::centre_of_mass()}) {
      const auto m = make_model(simplex_grid(c.alphabet, c.N), fn);
      const std::size_t n = m.size();
      std::vector<ObservationEvent> events = {ObservationEvent(c.alphabet)};
      std::vector<std::uint64_t> k(c.alphabet.size(), 0);
      k[0] = 2;
      events.emplace_back(c.alphabet, k);
      k.back() = 3;
      events.emplace_back(c.alphabet, k);
      for (std::uint64_t mask = 1; mask < (1u << n); ++mask) {
        Proposition p(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1) p.insert(i);
        }
        for (const auto& e : events) {
          CHECK(same_values(update_sampling(update_proposition(m, p), e),
                            update_proposition(update_sampling(m, e), p)));
        }
      }
    }
  }
}

TEST_CASE("property: KD45 and consistency of belief on random models") {
  Rng rng(21);
  const auto sampler = default_sampler();
  for (int t = 0; t < 500; ++t) {
    const Model m = random_model(rng, sampler);
    const std::size_t n = m.size();
    const auto& f = m.frame();
    const auto p = random_prop(rng, n), q = random_prop(rng, n);
    const auto all = Proposition::all(n), none = Proposition::none(n);
    const auto p_implies_q = ~p | q;

    if (belief_holds(f, p_implies_q) && belief_holds(f, p)) CHECK(belief_holds(f, q));
    const Proposition bp = belief_holds(f, p) ? all : none;
    if (belief_holds(f, p)) CHECK(belief_holds(f, bp));
    const Proposition not_bp = belief_holds(f, p) ? none : all;
    if (!belief_holds(f, p)) CHECK(belief_holds(f, not_bp));
    CHECK_FALSE((belief_holds(f, p) && belief_holds(f, ~p)));
    CHECK_FALSE(belief_holds(f, none));
    if (knowledge_holds(f, p)) CHECK(belief_holds(f, p));
  }
}

TEST_CASE("property: success of propositional update") {
  Rng rng(22);
  for (int t = 0; t < 500; ++t) {
    const Model m = random_model(rng, default_sampler());
    auto p = random_prop(rng, m.size());
    if (p.empty()) p.insert(pick(rng, m.size()));
    const Model u = update_proposition(m, p);
    CHECK(knowledge_holds(u.frame(), Proposition::all(u.size())));
    CHECK(u.size() == p.count());
    for (std::size_t i = 0; i < u.size(); ++i) {
      const auto idx = find_world(m.worlds(), u.worlds()[i]);
      REQUIRE(idx.has_value());
      CHECK(p.contains(*idx));
      CHECK(u.state().log_value(i) == m.state().log_value(*idx));
    }
  }
}

TEST_CASE("property: sampling preserves knowledge") {
  Rng rng(23);
  for (int t = 0; t < 500; ++t) {
    const Model m = random_model(rng, default_sampler());
    std::vector<std::uint64_t> counts(m.alphabet().size());
    for (auto& c : counts) c = pick(rng, 5);
    const Model u = update_sampling(m, ObservationEvent(m.alphabet(), counts));
    CHECK(u.worlds() == m.worlds());
    const auto p = random_prop(rng, m.size());
    CHECK(knowledge_holds(u.frame(), p) == knowledge_holds(m.frame(), p));
  }
}

TEST_CASE("property: consistent evidence gives consistent conditional belief") {
  Rng rng(24);
  for (int t = 0; t < 500; ++t) {
    const Model m = random_model(rng, default_sampler());
    const auto p = random_prop(rng, m.size()), q = random_prop(rng, m.size());
    if (!q.empty() && conditional_belief_prop(m.frame(), p, q)) {
      CHECK(p.intersects(q));
    }
  }
}
