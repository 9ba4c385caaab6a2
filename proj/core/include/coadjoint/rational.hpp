#ifndef COADJOINT_RATIONAL_HPP
#define COADJOINT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace coadjoint {

/// Exact rational scalar. Backed by GMP; always canonical
/// (denominator > 0, gcd(|num|, den) = 1).
using Rational = mpq_class;

using Vec = std::vector<Rational>;

/// A linear functional on the algebra, as coordinates in the dual basis.
using Functional = Vec;

/// Parses "p", "p/q", or decimal-free signed integers of any size.
/// Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(const std::string& text);

/// Renders canonically: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

std::string to_string(const Vec& v);

/// Parses a comma-separated list of rationals, e.g. "1,0,-2/3".
Vec parse_rational_list(const std::string& text);

}  // namespace coadjoint

#endif
