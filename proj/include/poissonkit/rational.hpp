#pragma once

#include <gmpxx.h>

#include <string>

#include "poissonkit/errors.hpp"

namespace poissonkit {

/// Exact rational coefficients. mpq_class keeps values in canonical form
/// (lowest terms, positive denominator, 0 = 0/1) as long as every value fed
/// into arithmetic is canonical, which the helpers below guarantee.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" with optional leading '-'. Throws ParseError on
/// malformed input or zero denominator.
inline Rational rational_from_string(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw ParseError(0, "invalid rational literal '" + text + "'");
    if (q.get_den() == 0)
        throw ParseError(0, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace poissonkit
