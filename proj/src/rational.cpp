#include "doxa/rational.hpp"

#include <cctype>

#include "doxa/error.hpp"

namespace doxa {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::InvalidArgument,
              "malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "zero denominator in '" + std::string(text) + "'");
    }
    q = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if (!whole.empty() && !all_digits(whole)) bad(text);
    if (!frac.empty() && !all_digits(frac)) bad(text);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class digits(std::string(whole.empty() ? "0" : whole) +
                         std::string(frac),
                     10);
    q = Rational(digits, scale);
  } else {
    if (!all_digits(body)) bad(text);
    q = Rational(mpz_class(std::string(body), 10), 1);
  }
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string format_rational(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace doxa
