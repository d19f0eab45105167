#include "doxa/checker.hpp"

#include "doxa/detail/overloaded.hpp"
#include "doxa/error.hpp"
#include "doxa/parser.hpp"
#include "doxa/simplex.hpp"

namespace doxa {

namespace {

struct Recorded {
  Formula f;
  Proposition ext;
};

class Evaluator {
 public:
  Evaluator(const CheckOptions& options, std::vector<Recorded>* trace)
      : options_(options), trace_(trace) {}

  // `record` is true only for subformulas evaluated in the caller's model,
  // where world indices are meaningful to the caller.
  Proposition eval(const Model& m, const Formula& f, bool record) {
    Proposition out = dispatch(m, f, record);
    if (record && trace_) trace_->push_back({f, out});
    return out;
  }

 private:
  static Proposition uniform(const Model& m, bool verdict) {
    return Proposition(m.size(), verdict);
  }

  Proposition dispatch(const Model& m, const Formula& f, bool record) {
    using detail::overloaded;
    return std::visit(
        overloaded{
            [&](const ast::Top&) { return uniform(m, true); },
            [&](const ast::LinIneq& n) { return linear(m, n); },
            [&](const ast::Not& n) { return ~eval(m, n.body, record); },
            [&](const ast::And& n) {
              Proposition a = eval(m, n.lhs, record);
              return a & eval(m, n.rhs, record);
            },
            [&](const ast::Or& n) {
              Proposition a = eval(m, n.lhs, record);
              return a | eval(m, n.rhs, record);
            },
            [&](const ast::Know& n) {
              return uniform(m, knowledge_holds(m.frame(), eval(m, n.body, record)));
            },
            [&](const ast::BelObs& n) {
              Proposition body = eval(m, n.body, record);
              return uniform(m, conditional_belief_event(
                                    m.frame(), body, observe(m.alphabet(), n.obs)));
            },
            [&](const ast::BelCond& n) {
              Proposition body = eval(m, n.body, record);
              Proposition cond = eval(m, n.cond, record);
              return uniform(m, conditional_belief_prop(m.frame(), body, cond));
            },
            [&](const ast::DynObs& n) {
              Model after = update_sampling(m, observe(m.alphabet(), n.obs));
              return eval(after, n.body, false);
            },
            [&](const ast::DynAnn& n) { return announcement(m, n, record); },
        },
        f.node().value);
  }

  Proposition linear(const Model& m, const ast::LinIneq& n) {
    std::vector<std::size_t> index;
    index.reserve(n.terms.size());
    for (const auto& t : n.terms) index.push_back(m.alphabet().require_index(t.outcome));
    Proposition out(m.size());
    Rational sum;
    for (std::size_t w = 0; w < m.size(); ++w) {
      const auto& world = m.worlds()[w];
      sum = 0;
      for (std::size_t k = 0; k < n.terms.size(); ++k) {
        sum += n.terms[k].coeff * world.weight(index[k]);
      }
      if (sum >= n.bound) out.insert(w);
    }
    return out;
  }

  Proposition announcement(const Model& m, const ast::DynAnn& n, bool record) {
    const bool vacuous = options_.relativize_announcements;
    Proposition ann = eval(m, n.ann, record);
    if (ann.empty()) return uniform(m, vacuous);
    Model after = update_proposition(m, ann);
    Proposition inner = eval(after, n.body, false);
    Proposition out(m.size());
    std::size_t rank = 0;
    for (std::size_t w = 0; w < m.size(); ++w) {
      if (ann.contains(w)) {
        if (inner.contains(rank)) out.insert(w);
        ++rank;
      } else if (vacuous) {
        out.insert(w);
      }
    }
    return out;
  }

  const CheckOptions& options_;
  std::vector<Recorded>* trace_;
};

}  // namespace

Proposition extension(const Model& model, const Formula& f,
                      const CheckOptions& options) {
  return Evaluator(options, nullptr).eval(model, f, false);
}

bool satisfies(const Model& model, const MassFunction& world, const Formula& f,
               const CheckOptions& options) {
  auto index = find_world(model.worlds(), world);
  if (!index) {
    throw Error(ErrorCode::WorldNotInModel,
                "world " + world.to_string() + " is not in the model");
  }
  return extension(model, f, options).contains(*index);
}

bool valid_in_model(const Model& model, const Formula& f,
                    const CheckOptions& options) {
  return extension(model, f, options).is_full();
}

CheckResult check_world(const Model& model, std::size_t world, const Formula& f,
                        bool with_trace, const CheckOptions& options) {
  if (world >= model.size()) {
    throw Error(ErrorCode::WorldNotInModel,
                "world index " + std::to_string(world) + " is out of range");
  }
  std::vector<Recorded> recorded;
  Proposition ext =
      Evaluator(options, with_trace ? &recorded : nullptr).eval(model, f, true);
  CheckResult result;
  result.verdict = ext.contains(world);
  result.world = world;
  for (const auto& r : recorded) {
    result.trace.push_back({print_formula(r.f), r.ext.contains(world)});
  }
  return result;
}

}  // namespace doxa
