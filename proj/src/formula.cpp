#include "doxa/formula.hpp"

#include <algorithm>

#include "doxa/detail/overloaded.hpp"
#include "doxa/error.hpp"

namespace doxa {

Formula::Formula(FormulaNode node)
    : node_(std::make_shared<const FormulaNode>(std::move(node))) {}

bool Formula::operator==(const Formula& other) const {
  return node_ == other.node_ || *node_ == *other.node_;
}

Formula top() { return Formula({ast::Top{}}); }

Formula lin(std::vector<ast::Term> terms, Rational bound) {
  if (terms.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "a linear inequality needs at least one term");
  }
  for (auto& t : terms) t.coeff.canonicalize();
  bound.canonicalize();
  return Formula({ast::LinIneq{std::move(terms), std::move(bound)}});
}

Formula weight_at_least(const std::string& outcome, Rational bound) {
  return lin({ast::Term{Rational(1), outcome}}, std::move(bound));
}

Formula neg(Formula f) { return Formula({ast::Not{std::move(f)}}); }

Formula conj(Formula a, Formula b) {
  return Formula({ast::And{std::move(a), std::move(b)}});
}

Formula disj(Formula a, Formula b) {
  return Formula({ast::Or{std::move(a), std::move(b)}});
}

Formula implies(Formula a, Formula b) {
  return disj(neg(std::move(a)), std::move(b));
}

Formula iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }

Formula know(Formula f) { return Formula({ast::Know{std::move(f)}}); }

Formula believe(Formula f) { return believe_given(std::move(f), top()); }

Formula believe_given(Formula body, Formula cond) {
  return Formula({ast::BelCond{std::move(body), std::move(cond)}});
}

Formula believe_after(Formula body, std::vector<std::string> obs) {
  if (obs.empty()) {
    throw Error(ErrorCode::InvalidArgument, "observation list is empty");
  }
  return Formula({ast::BelObs{std::move(body), std::move(obs)}});
}

Formula after_obs(std::vector<std::string> obs, Formula body) {
  if (obs.empty()) {
    throw Error(ErrorCode::InvalidArgument, "observation list is empty");
  }
  return Formula({ast::DynObs{std::move(obs), std::move(body)}});
}

Formula after_ann(Formula ann, Formula body) {
  return Formula({ast::DynAnn{std::move(ann), std::move(body)}});
}

using detail::overloaded;

std::size_t formula_size(const Formula& f) {
  return std::visit(
      overloaded{
          [](const ast::Top&) -> std::size_t { return 1; },
          [](const ast::LinIneq&) -> std::size_t { return 1; },
          [](const ast::Not& n) { return 1 + formula_size(n.body); },
          [](const ast::And& n) {
            return 1 + formula_size(n.lhs) + formula_size(n.rhs);
          },
          [](const ast::Or& n) {
            return 1 + formula_size(n.lhs) + formula_size(n.rhs);
          },
          [](const ast::Know& n) { return 1 + formula_size(n.body); },
          [](const ast::BelObs& n) { return 1 + formula_size(n.body); },
          [](const ast::BelCond& n) {
            return 1 + formula_size(n.body) + formula_size(n.cond);
          },
          [](const ast::DynObs& n) { return 1 + formula_size(n.body); },
          [](const ast::DynAnn& n) {
            return 1 + formula_size(n.ann) + formula_size(n.body);
          },
      },
      f.node().value);
}

std::size_t formula_depth(const Formula& f) {
  return std::visit(
      overloaded{
          [](const ast::Top&) -> std::size_t { return 0; },
          [](const ast::LinIneq&) -> std::size_t { return 0; },
          [](const ast::Not& n) { return 1 + formula_depth(n.body); },
          [](const ast::And& n) {
            return 1 + std::max(formula_depth(n.lhs), formula_depth(n.rhs));
          },
          [](const ast::Or& n) {
            return 1 + std::max(formula_depth(n.lhs), formula_depth(n.rhs));
          },
          [](const ast::Know& n) { return 1 + formula_depth(n.body); },
          [](const ast::BelObs& n) { return 1 + formula_depth(n.body); },
          [](const ast::BelCond& n) {
            return 1 + std::max(formula_depth(n.body), formula_depth(n.cond));
          },
          [](const ast::DynObs& n) { return 1 + formula_depth(n.body); },
          [](const ast::DynAnn& n) {
            return 1 + std::max(formula_depth(n.ann), formula_depth(n.body));
          },
      },
      f.node().value);
}

}  // namespace doxa
