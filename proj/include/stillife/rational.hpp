#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace stillife {

// Arbitrary-precision rational; mpq_class keeps values canonical
// (lowest terms, positive denominator) through arithmetic.
using Rational = mpq_class;

// gmpxx lacks long long constructors; on this LP64 target long carries the
// same 64 bits, which the assert pins down.
static_assert(sizeof(long) == sizeof(long long), "64-bit long required");

inline Rational ratio(long long num, long long den = 1) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "p" or "p/q" with optional leading '-'; rejects everything else.
std::optional<Rational> parse_rational(const std::string& s);

}  // namespace stillife
