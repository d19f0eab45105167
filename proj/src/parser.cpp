#include "doxa/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "doxa/detail/overloaded.hpp"

namespace doxa {

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& message)
    : Error(ErrorCode::ParseError, message),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

enum class Tok {
  Ident, Number, LParen, RParen, LBrack, RBrack, Comma, Bar, Amp, Tilde,
  Arrow, Ge, Le, Eq, Gt, Lt, Plus, Minus, Star, Slash, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(const Token& t) {
  return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(src.substr(i, len)), i});
    i += len;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_')) {
        ++j;
      }
      push(Tok::Ident, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      push(Tok::Number, j - i);
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == "->") { push(Tok::Arrow, 2); continue; }
    if (two == ">=") { push(Tok::Ge, 2); continue; }
    if (two == "<=") { push(Tok::Le, 2); continue; }
    switch (c) {
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '[': push(Tok::LBrack, 1); continue;
      case ']': push(Tok::RBrack, 1); continue;
      case ',': push(Tok::Comma, 1); continue;
      case '|': push(Tok::Bar, 1); continue;
      case '&': push(Tok::Amp, 1); continue;
      case '~': push(Tok::Tilde, 1); continue;
      case '=': push(Tok::Eq, 1); continue;
      case '>': push(Tok::Gt, 1); continue;
      case '<': push(Tok::Lt, 1); continue;
      case '+': push(Tok::Plus, 1); continue;
      case '-': push(Tok::Minus, 1); continue;
      case '*': push(Tok::Star, 1); continue;
      case '/': push(Tok::Slash, 1); continue;
      default:
        throw ParseError(i, {}, "unexpected character '" + std::string(1, c) +
                                    "' at position " + std::to_string(i));
    }
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const OutcomeAlphabet& alphabet)
      : tokens_(tokenize(text)), alphabet_(alphabet) {}

  Formula parse_all() {
    Formula f = formula(true);
    if (peek().kind != Tok::End) fail({"end of input", "'&'", "'|'", "'->'"});
    return f;
  }

 private:
  // A term or a constant read off one side of a comparison.
  struct Side {
    std::vector<ast::Term> terms;
    Rational constant = 0;
  };

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() { return tokens_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(std::string_view name) const {
    return at(Tok::Ident) && peek().text == name;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "at position " + std::to_string(t.pos) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + describe(t);
    throw ParseError(t.pos, std::move(expected), msg);
  }

  void expect(Tok k, const std::string& what) {
    if (!at(k)) fail({what});
    advance();
  }

  Formula formula(bool bar) { return impl(bar); }

  Formula impl(bool bar) {
    Formula lhs = disjunction(bar);
    if (at(Tok::Arrow)) {
      advance();
      return implies(std::move(lhs), impl(bar));
    }
    return lhs;
  }

  Formula disjunction(bool bar) {
    Formula lhs = conjunction();
    while (bar && at(Tok::Bar)) {
      advance();
      lhs = disj(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (at(Tok::Amp)) {
      advance();
      lhs = conj(std::move(lhs), unary());
    }
    return lhs;
  }

  // IDENT ("," IDENT)* followed by `closer`, every IDENT an outcome name.
  std::optional<std::vector<std::string>> try_obslist(Tok closer) {
    std::vector<std::string> names;
    std::size_t i = pos_;
    while (true) {
      const Token& t = tokens_[i];
      if (t.kind != Tok::Ident || !alphabet_.index_of(t.text)) return std::nullopt;
      names.push_back(t.text);
      ++i;
      if (tokens_[i].kind == Tok::Comma) {
        ++i;
        continue;
      }
      if (tokens_[i].kind != closer) return std::nullopt;
      break;
    }
    pos_ = i;
    return names;
  }

  Formula unary() {
    if (at(Tok::Tilde)) {
      advance();
      return neg(unary());
    }
    if (at_ident("K")) {
      advance();
      return know(unary());
    }
    if (at_ident("B")) {
      advance();
      if (!at(Tok::LParen)) return believe(unary());
      advance();
      Formula body = formula(false);
      if (at(Tok::RParen)) {
        advance();
        return believe(std::move(body));
      }
      if (!at(Tok::Bar)) fail({"'|'", "')'"});
      advance();
      if (auto obs = try_obslist(Tok::RParen)) {
        expect(Tok::RParen, "')'");
        return believe_after(std::move(body), std::move(*obs));
      }
      Formula cond = formula(true);
      expect(Tok::RParen, "')'");
      return believe_given(std::move(body), std::move(cond));
    }
    if (at(Tok::LBrack)) {
      advance();
      if (auto obs = try_obslist(Tok::RBrack)) {
        expect(Tok::RBrack, "']'");
        return after_obs(std::move(*obs), unary());
      }
      Formula ann = formula(true);
      expect(Tok::RBrack, "']'");
      return after_ann(std::move(ann), unary());
    }
    return atom();
  }

  Formula atom() {
    if (at_ident("T")) {
      advance();
      return top();
    }
    if (at(Tok::LParen)) {
      advance();
      Formula f = formula(true);
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at(Tok::Number) || at(Tok::Minus) || at(Tok::Plus) ||
        (at_ident("w") && peek(1).kind == Tok::LParen)) {
      return comparison();
    }
    fail({"'~'", "'K'", "'B'", "'['", "'T'", "'('", "'w('", "number"});
  }

  Rational rational() {
    if (!at(Tok::Number)) fail({"number"});
    Rational q = parse_rational(advance().text);
    if (at(Tok::Slash)) {
      advance();
      if (!at(Tok::Number)) fail({"number"});
      const Token& den_tok = peek();
      Rational den = parse_rational(advance().text);
      if (sgn(den) == 0) {
        throw ParseError(den_tok.pos, {"non-zero denominator"},
                         "at position " + std::to_string(den_tok.pos) +
                             ": zero denominator");
      }
      q /= den;
    }
    return q;
  }

  std::string weight_outcome() {
    advance();  // "w"
    expect(Tok::LParen, "'('");
    if (!at(Tok::Ident)) fail({"outcome name"});
    const Token& t = advance();
    if (!alphabet_.index_of(t.text)) {
      throw Error(ErrorCode::UnknownOutcome,
                  "at position " + std::to_string(t.pos) +
                      ": unknown outcome '" + t.text + "'");
    }
    expect(Tok::RParen, "')'");
    return t.text;
  }

  void signed_term(Side& side, bool negative) {
    Rational coeff = 1;
    bool has_coeff = false;
    if (at(Tok::Number)) {
      coeff = rational();
      has_coeff = true;
      if (!at(Tok::Star)) {
        side.constant += negative ? Rational(-coeff) : coeff;
        return;
      }
      advance();
    }
    if (!(at_ident("w") && peek(1).kind == Tok::LParen)) {
      fail(has_coeff ? std::vector<std::string>{"'w('"}
                     : std::vector<std::string>{"'w('", "number"});
    }
    std::string name = weight_outcome();
    side.terms.push_back({negative ? Rational(-coeff) : coeff, std::move(name)});
  }

  Side linear_side() {
    Side side;
    bool negative = false;
    if (at(Tok::Minus) || at(Tok::Plus)) negative = advance().kind == Tok::Minus;
    signed_term(side, negative);
    while (at(Tok::Plus) || at(Tok::Minus)) {
      negative = advance().kind == Tok::Minus;
      signed_term(side, negative);
    }
    return side;
  }

  static std::vector<ast::Term> negated(const std::vector<ast::Term>& terms) {
    std::vector<ast::Term> out = terms;
    for (auto& t : out) t.coeff = -t.coeff;
    return out;
  }

  Formula comparison() {
    const std::size_t start = peek().pos;
    Side lhs = linear_side();
    Tok rel = peek().kind;
    if (rel != Tok::Ge && rel != Tok::Le && rel != Tok::Eq && rel != Tok::Gt &&
        rel != Tok::Lt) {
      fail({"'>='", "'<='", "'='", "'>'", "'<'"});
    }
    advance();
    Side rhs = linear_side();

    // lhs.terms - rhs.terms  REL  rhs.constant - lhs.constant
    std::vector<ast::Term> terms = lhs.terms;
    for (auto& t : rhs.terms) terms.push_back({-t.coeff, t.outcome});
    Rational bound = rhs.constant - lhs.constant;
    if (terms.empty()) {
      throw ParseError(start, {"'w('"},
                       "at position " + std::to_string(start) +
                           ": comparison has no w(...) term");
    }
    switch (rel) {
      case Tok::Ge: return lin(terms, bound);
      case Tok::Le: return lin(negated(terms), -bound);
      case Tok::Eq: return conj(lin(terms, bound), lin(negated(terms), -bound));
      case Tok::Gt: return neg(lin(negated(terms), -bound));
      case Tok::Lt: return neg(lin(terms, bound));
      default: break;
    }
    fail({"relation"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const OutcomeAlphabet& alphabet_;
};

// Printing precedences: higher binds tighter.
constexpr int kPrecOr = 1;
constexpr int kPrecAnd = 2;
constexpr int kPrecUnary = 3;
constexpr int kPrecAtom = 4;

int precedence(const Formula& f) {
  if (f.as<ast::Or>()) return kPrecOr;
  if (f.as<ast::And>()) return kPrecAnd;
  if (f.as<ast::Top>() || f.as<ast::LinIneq>()) return kPrecAtom;
  return kPrecUnary;
}

void print(std::ostream& out, const Formula& f, int min_prec);

std::string join(const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) s += ",";
    s += names[i];
  }
  return s;
}

void print_term(std::ostream& out, const ast::Term& t, bool first) {
  const bool negative = sgn(t.coeff) < 0;
  const Rational magnitude = abs(t.coeff);
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  if (magnitude != 1) out << format_rational(magnitude) << "*";
  out << "w(" << t.outcome << ")";
}

// Body of B(... | ...): a top-level disjunction would be read as the bar.
void print_bel_body(std::ostream& out, const Formula& body) {
  if (body.as<ast::Or>()) {
    out << "(";
    print(out, body, 0);
    out << ")";
  } else {
    print(out, body, 0);
  }
}

// Boxarg / cond position: a bare "T" could be an outcome name.
void print_guarded(std::ostream& out, const Formula& f) {
  if (f.as<ast::Top>()) {
    out << "(T)";
  } else {
    print(out, f, 0);
  }
}

void print(std::ostream& out, const Formula& f, int min_prec) {
  using detail::overloaded;
  if (precedence(f) < min_prec) {
    out << "(";
    print(out, f, 0);
    out << ")";
    return;
  }
  std::visit(
      overloaded{
          [&](const ast::Top&) { out << "T"; },
          [&](const ast::LinIneq& n) {
            for (std::size_t i = 0; i < n.terms.size(); ++i) {
              print_term(out, n.terms[i], i == 0);
            }
            out << " >= " << format_rational(n.bound);
          },
          [&](const ast::Not& n) {
            out << "~";
            print(out, n.body, kPrecUnary);
          },
          [&](const ast::And& n) {
            print(out, n.lhs, kPrecAnd);
            out << " & ";
            print(out, n.rhs, kPrecUnary);
          },
          [&](const ast::Or& n) {
            print(out, n.lhs, kPrecOr);
            out << " | ";
            print(out, n.rhs, kPrecAnd);
          },
          [&](const ast::Know& n) {
            out << "K ";
            print(out, n.body, kPrecUnary);
          },
          [&](const ast::BelObs& n) {
            out << "B(";
            print_bel_body(out, n.body);
            out << " | " << join(n.obs) << ")";
          },
          [&](const ast::BelCond& n) {
            if (n.cond.as<ast::Top>()) {
              // "B (a | b)" would read as a conditional; double the parens.
              if (n.body.as<ast::Or>()) {
                out << "B ((";
                print(out, n.body, 0);
                out << "))";
              } else {
                out << "B ";
                print(out, n.body, kPrecUnary);
              }
              return;
            }
            out << "B(";
            print_bel_body(out, n.body);
            out << " | ";
            print_guarded(out, n.cond);
            out << ")";
          },
          [&](const ast::DynObs& n) {
            out << "[" << join(n.obs) << "] ";
            print(out, n.body, kPrecUnary);
          },
          [&](const ast::DynAnn& n) {
            out << "[";
            print_guarded(out, n.ann);
            out << "] ";
            print(out, n.body, kPrecUnary);
          },
      },
      f.node().value);
}

}  // namespace

Formula parse_formula(std::string_view text, const OutcomeAlphabet& alphabet) {
  return Parser(text, alphabet).parse_all();
}

std::string print_formula(const Formula& f) {
  std::ostringstream out;
  print(out, f, 0);
  return out.str();
}

}  // namespace doxa
