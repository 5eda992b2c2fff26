#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qtors/poly.hpp"

namespace qtors {

/// Irreducible factorization over Z/pZ, p an odd prime < 2^31. The input must
/// have denominators prime to p and must not vanish mod p. Factors are monic,
/// paired with multiplicities, and their product times lc reproduces f mod p.
std::vector<std::pair<QPoly, int>> factor_mod_p(const QPoly& f, long p);

/// All irreducible integer-primitive factors of f of degree <= max_degree,
/// each listed once (no multiplicities), positive leading coefficients,
/// sorted by degree then by coefficient sequence. f != 0.
///
/// Method: reduce to an integer-primitive squarefree polynomial, factor it
/// modulo a good prime (squarefree reduction, full degree), Hensel-lift past
/// the Mignotte bound for degree <= max_degree divisors, then recombine
/// subsets of modular factors of total degree <= max_degree and confirm every
/// candidate by trial division.
std::vector<QPoly> bounded_factors(const QPoly& f, int max_degree);

/// All rational roots of f, without multiplicity. f != 0.
std::vector<Rat> rational_roots(const QPoly& f);

/// True iff f is irreducible over Q (constants are not irreducible).
bool is_irreducible(const QPoly& f);

}  // namespace qtors
