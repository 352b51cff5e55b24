#pragma once

#include <gmpxx.h>

#include <string>

namespace symfun {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Parses "3", "-1/2"; throws ParseError otherwise.
Rational parse_rational(const std::string& text);

}  // namespace symfun
