#ifndef DOXA_RATIONAL_HPP
#define DOXA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace doxa {

using Rational = mpq_class;

/// Parses "p", "p/q", "-p/q" or a decimal such as "0.55" into a canonical
/// rational. Throws Error(InvalidArgument) on malformed text or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q" (canonical form).
std::string format_rational(const Rational& q);

}  // namespace doxa

#endif  // DOXA_RATIONAL_HPP
