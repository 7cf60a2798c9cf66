#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropos {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "p/q", or a decimal such as "-1.25" or "3e-2" into an exact
// rational. Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace tropos
