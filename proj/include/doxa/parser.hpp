#ifndef DOXA_PARSER_HPP
#define DOXA_PARSER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "doxa/alphabet.hpp"
#include "doxa/error.hpp"
#include "doxa/formula.hpp"

namespace doxa {

/// Surface syntax of formulas, as printed by `doxa check --help`.
inline constexpr std::string_view kFormulaGrammar =
    R"ebnf(formula := impl ; impl := or ("->" impl)? ; or := and ("|" and)* ; and := unary ("&" unary)* ;
unary := "~" unary | "K" unary | "B" unary | "B(" formula "|" cond ")" | "[" boxarg "]" unary | atom ;
boxarg := obslist | formula ; cond := obslist | formula ; obslist := OUTCOME ("," OUTCOME)* ;
atom := "T" | lin | "(" formula ")" ; lin := linsum REL rat ; REL := ">=" | "<=" | "=" | ">" | "<" ;
linsum := term (("+"|"-") term)* ; term := (rat "*")? "w(" OUTCOME ")" ; rat := INT ("/" INT)? .)ebnf";

/// Notes on the accepted language, beyond the grammar above:
///  - "->" is sugar for "~a | b"; "<=", "=", ">" and "<" are rewritten into
///    ">=" atoms (coefficient negation, a conjunction, a negation);
///  - "B phi" abbreviates B(phi | T);
///  - inside B( ... | ... ) the body is cut at the first top-level "|", so a
///    disjunctive body must be parenthesised;
///  - a boxarg / cond that is a comma-separated list of alphabet names is an
///    observation list, anything else is a formula;
///  - either side of a comparison may carry w-terms and constants, a leading
///    sign is allowed, and rationals may be written as decimals ("0.55").
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& message);

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Throws ParseError on syntax errors and Error(UnknownOutcome) when a
/// w(...) term names an outcome outside the alphabet.
Formula parse_formula(std::string_view text, const OutcomeAlphabet& alphabet);

/// Canonical text; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

}  // namespace doxa

#endif  // DOXA_PARSER_HPP
