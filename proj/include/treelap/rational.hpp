#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace treelap {

// Exact rational arithmetic. GMP's mpq_class already provides canonical form
// (reduced, positive denominator) and arbitrary precision; everything here is
// glue: parsing the string forms the CLI accepts and printing forms the JSON
// reports need.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "3", "-7/2", "0.25", "1e-6", "2.5e3". Throws std::invalid_argument on
// malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

inline std::string num_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_string(const Rational& q) { return q.get_den().get_str(); }

// "num/den" (or just "num" when den == 1).
std::string fraction_string(const Rational& q);

// Fixed-point decimal rendering with the given number of fractional digits,
// truncated toward zero. Used for the human-readable companion field next to
// the exact num/den pair in reports.
std::string decimal_string(const Rational& q, int digits = 12);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace treelap
