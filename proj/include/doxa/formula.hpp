#ifndef DOXA_FORMULA_HPP
#define DOXA_FORMULA_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "doxa/rational.hpp"

namespace doxa {

struct FormulaNode;

/// Immutable, shared formula of the dynamic doxastic language. Subformulas
/// are shared between copies; equality is structural.
class Formula {
 public:
  explicit Formula(FormulaNode node);

  const FormulaNode& node() const { return *node_; }

  template <class T>
  const T* as() const;

  bool operator==(const Formula& other) const;

 private:
  std::shared_ptr<const FormulaNode> node_;
};

namespace ast {

struct Top {
  bool operator==(const Top&) const = default;
};

struct Term {
  Rational coeff;
  std::string outcome;
  bool operator==(const Term&) const = default;
};

/// sum(coeff_i * w(outcome_i)) >= bound
struct LinIneq {
  std::vector<Term> terms;
  Rational bound;
  bool operator==(const LinIneq&) const = default;
};

struct Not {
  Formula body;
  bool operator==(const Not&) const = default;
};

struct And {
  Formula lhs, rhs;
  bool operator==(const And&) const = default;
};

struct Or {
  Formula lhs, rhs;
  bool operator==(const Or&) const = default;
};

struct Know {
  Formula body;
  bool operator==(const Know&) const = default;
};

/// B(body | o1, ..., ok): belief after conditioning on the observations.
struct BelObs {
  Formula body;
  std::vector<std::string> obs;
  bool operator==(const BelObs&) const = default;
};

/// B(body | cond): belief restricted to the cond-worlds.
struct BelCond {
  Formula body;
  Formula cond;
  bool operator==(const BelCond&) const = default;
};

/// [o1, ..., ok] body: after observing the outcomes.
struct DynObs {
  std::vector<std::string> obs;
  Formula body;
  bool operator==(const DynObs&) const = default;
};

/// [ann] body: after learning the higher-order information ann.
struct DynAnn {
  Formula ann;
  Formula body;
  bool operator==(const DynAnn&) const = default;
};

}  // namespace ast

struct FormulaNode {
  std::variant<ast::Top, ast::LinIneq, ast::Not, ast::And, ast::Or, ast::Know,
               ast::BelObs, ast::BelCond, ast::DynObs, ast::DynAnn>
      value;
  bool operator==(const FormulaNode&) const = default;
};

template <class T>
const T* Formula::as() const {
  return std::get_if<T>(&node_->value);
}

// Builders. Derived connectives are expanded into the primitive nodes.
Formula top();
Formula lin(std::vector<ast::Term> terms, Rational bound);
/// w(outcome) >= bound
Formula weight_at_least(const std::string& outcome, Rational bound);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
/// a -> b, as ~a | b
Formula implies(Formula a, Formula b);
/// (a -> b) & (b -> a)
Formula iff(Formula a, Formula b);
Formula know(Formula f);
/// B f, as B(f | T)
Formula believe(Formula f);
Formula believe_given(Formula body, Formula cond);
Formula believe_after(Formula body, std::vector<std::string> obs);
Formula after_obs(std::vector<std::string> obs, Formula body);
Formula after_ann(Formula ann, Formula body);

/// Number of nodes.
std::size_t formula_size(const Formula& f);
/// Edges on the longest root-to-leaf path (an atom has depth 0).
std::size_t formula_depth(const Formula& f);

}  // namespace doxa

#endif  // DOXA_FORMULA_HPP
