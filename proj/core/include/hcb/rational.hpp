#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hcb {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q". Rejects q = 0 and anything non-numeric.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" with q > 0; integers print without a denominator.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Requires is_integer(q); throws InvalidInput otherwise or on overflow.
long long to_integer(const Rational& q);

/// Smallest integer >= q.
long long ceil_to_integer(const Rational& q);

}  // namespace hcb
