#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lagrel {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;

using Vector = std::vector<Rational>;

/// Parses "p", "p/q" or "-p/q". Throws lagrel::ParseError on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always emits "p/q" with q > 0, including "n/1" for integers.
std::string format_rational(const Rational& value);

/// Parses a comma separated list such as "1,0,-1/2".
Vector parse_vector(std::string_view text);

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Rational dot(const Vector& a, const Vector& b);

}  // namespace lagrel
