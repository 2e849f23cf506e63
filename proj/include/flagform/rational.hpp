#ifndef FLAGFORM_RATIONAL_HPP
#define FLAGFORM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace flagform {

// Exact rational scalar. mpq_class keeps the invariants we need once
// canonicalized: gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;
using Vec = std::vector<Rational>;

// Parses "p" or "p/q" (optional leading '-', base 10). Rejects anything else,
// including q = 0.
Rational parse_rational(const std::string& s);

// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& r);

bool is_zero(const Rational& r);

}  // namespace flagform

#endif
