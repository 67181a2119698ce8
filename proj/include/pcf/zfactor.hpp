#pragma once

// Factorization of integer polynomials: squarefree decomposition,
// Cantor-Zassenhaus over F_p, multifactor Hensel lifting and Zassenhaus
// subset recombination.

#include <cstdint>
#include <utility>
#include <vector>

#include "pcf/modp.hpp"
#include "pcf/polycore.hpp"

namespace pcf {

struct FactoredPoly {
    /// Sign times content of the input.
    mpz_class unit = 1;
    /// Primitive irreducible factors with positive leading coefficient,
    /// sorted by degree then coefficients.
    std::vector<std::pair<IntPolynomial, unsigned>> factors;

    /// unit * prod factor^multiplicity.
    IntPolynomial expand() const;
    std::size_t count() const { return factors.size(); }
};

inline constexpr std::uint64_t kDefaultSeed = 0;

IntPolynomial squarefree_part(const IntPolynomial& p);

/// Squarefree decomposition of a primitive polynomial: pairs (s_i, i) with
/// p = prod s_i^i, each s_i primitive and squarefree.
std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& p);

/// Monic irreducible factors of p modulo prime, sorted. Throws
/// NotSquarefreeModP when p mod prime has a repeated factor, and Error when
/// prime divides lc(p).
std::vector<IntPolynomial> factor_mod_p(const IntPolynomial& p, std::uint64_t prime,
                                        std::uint64_t seed = kDefaultSeed);

/// Lifts p = lc(p) * prod factors (mod prime) to a factorization modulo
/// prime^k. Factors must be monic and pairwise coprime mod prime. Returned
/// factors are monic with coefficients in [0, prime^k).
std::vector<IntPolynomial> hensel_lift(const IntPolynomial& p, const std::vector<IntPolynomial>& factors,
                                       std::uint64_t prime, unsigned k);

FactoredPoly factor_z(const IntPolynomial& p, std::uint64_t seed = kDefaultSeed);

bool is_irreducible_z(const IntPolynomial& p, std::uint64_t seed = kDefaultSeed);

/// Coefficient bound for any factor of p (Mignotte): 2^deg * ||p||_2.
mpz_class mignotte_bound(const IntPolynomial& p);

} // namespace pcf
