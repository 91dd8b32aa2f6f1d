#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gfactor {

using Integer = mpz_class;
/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) as long as raw num/den edits are followed by
/// canonicalize(); all constructors used in this library do that.
using Rational = mpq_class;

/// "a/b" in lowest terms, integers without "/1".
std::string to_string(const Rational& q);

/// Parses "[-]int[/nat]". Throws std::invalid_argument on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

}  // namespace gfactor
