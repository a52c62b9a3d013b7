#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace jaccoord {

/// Exact rational number. GMP keeps mpq_class canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rat& r);

/// Parses "p", "-p" or "p/q" (no whitespace). Throws SyntaxError.
Rat parse_rat(std::string_view text);

inline Rat make_rat(const Int& num, const Int& den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// r^e for a non-negative exponent.
Rat pow(const Rat& r, unsigned long e);

}  // namespace jaccoord
