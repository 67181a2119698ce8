#pragma once

// Critical-orbit polynomials of f(x) = x^d + c and the Misiurewicz
// polynomials G_d(m, n) built from them.
//
// Everything is univariate in c: the dynatomic products are evaluated at
// the critical point 0, where they reduce to products of orbit differences
// a_{j+k}(c) - a_j(c) with a_0 = 0.

#include <cstddef>
#include <vector>

#include "pcf/polycore.hpp"

namespace pcf {

/// Default cap on the number of coefficients of the largest orbit polynomial.
inline constexpr std::size_t kDefaultDegreeBudget = 1'000'000;

/// The sequence a_1(c), ..., a_T(c) with a_1 = c and a_{i+1} = a_i^d + c.
struct OrbitSequence {
    long d = 2;
    std::vector<IntPolynomial> polys; // polys[i-1] = a_i

    std::size_t size() const { return polys.size(); }
    /// a_i for 0 <= i <= size(); a_0 is the zero polynomial.
    IntPolynomial at(std::size_t i) const;
};

/// G_d(m, n) together with its parameters.
struct MisiurewiczPoly {
    long d = 2, m = 0, n = 1;
    IntPolynomial G;
    /// The constant polynomial 1 (no parameter of this exact type exists).
    bool degenerate = false;
};

/// The tail exponent A with (a_i)^A = (d) for prime d and n | i.
struct ExponentA {
    unsigned long value = 0;
};

OrbitSequence orbit_polys(long d, std::size_t upto, std::size_t degree_budget = kDefaultDegreeBudget);

/// prod_{k | n} (a_{j+k} - a_j)^{mu(n/k)}, as an exact quotient in Z[c].
IntPolynomial dyn_product_at_orbit(long d, long j, long n, std::size_t degree_budget = kDefaultDegreeBudget);
/// Same, reusing an orbit that already holds a_{j+n}.
IntPolynomial dyn_product_at_orbit(const OrbitSequence& orbit, long j, long n);

MisiurewiczPoly gdmn(long d, long m, long n, std::size_t degree_budget = kDefaultDegreeBudget);

ExponentA exponent_formula(long d, long m, long n);

/// Degree predicted for G_d(m, n) where a closed form is known
/// (n = 1, or d = 2 and n = 2); -1 otherwise.
long expected_degree(long d, long m, long n);

} // namespace pcf
