#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace orbilat {

// Exact arithmetic types. GMP keeps rationals in lowest terms with a
// positive denominator, which is exactly the invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p". Returns nullopt on malformed input or q == 0.
std::optional<Rational> rat_from_string(std::string_view s);

// Lowest-terms string, "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rational& r);

} // namespace orbilat
