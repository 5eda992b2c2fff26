#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qtors {

// Exact arithmetic base types. mpq_class keeps gcd(num, den) = 1 and den >= 1
// by canonicalization, which is exactly the invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

/// Exact integer square root if n is a perfect square.
std::optional<Int> sqrt_exact(const Int& n);

/// Exact rational square root if r is a square in Q (r >= 0).
std::optional<Rat> sqrt_exact(const Rat& r);

/// Largest divisor d of n with n = d * s^2 and d squarefree up to factors of
/// primes beyond the trial-division budget. Sign is preserved.
Int square_free_kernel(const Int& n);

/// Parse an integer or fraction "a/b". Throws std::invalid_argument on junk.
Rat parse_rational(const std::string& s);

std::string to_string(const Rat& r);

}  // namespace qtors
