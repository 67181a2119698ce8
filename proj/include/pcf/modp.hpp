#pragma once

// Polynomials over the prime field F_p, p < 2^62, dense ascending order.
// Used by the factorization engine and by the modular resultant.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "pcf/polycore.hpp"

namespace pcf::modp {

using Poly = std::vector<std::uint64_t>;

struct Field {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t reduce(const mpz_class& v) const;
};

void trim(Poly& f);
long degree(const Poly& f);
Poly from_int(const IntPolynomial& f, const Field& F);
/// Lift with coefficients in [0, p).
IntPolynomial to_int(const Poly& f);

Poly add(const Poly& a, const Poly& b, const Field& F);
Poly sub(const Poly& a, const Poly& b, const Field& F);
Poly mul(const Poly& a, const Poly& b, const Field& F);
Poly scale(const Poly& a, std::uint64_t k, const Field& F);
void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r, const Field& F);
Poly rem(const Poly& a, const Poly& b, const Field& F);
Poly make_monic(const Poly& a, const Field& F);
/// Monic gcd (zero polynomial when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b, const Field& F);
Poly derivative(const Poly& a, const Field& F);
/// base^e mod m, e given as a multiprecision exponent.
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, const Field& F);
std::uint64_t resultant(Poly a, Poly b, const Field& F);

/// Factors a monic squarefree polynomial into monic irreducibles
/// (distinct-degree then equal-degree splitting). Output is sorted.
std::vector<Poly> factor_squarefree(const Poly& f, const Field& F, std::mt19937_64& rng);

/// Degrees of the irreducible factors of a monic squarefree polynomial
/// (distinct-degree splitting only).
std::vector<long> factor_degrees(const Poly& f, const Field& F);

} // namespace pcf::modp
