#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qes {

using Rational = mpq_class;

/// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double value);

/// Parses "p/q", "p", or a plain decimal such as "-0.125" (exactly).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace qes
