#pragma once

// Test-side oracles. These deliberately avoid the library's own algorithms:
// schoolbook products, Bareiss determinants of Sylvester matrices, and
// direct integer iteration of the critical orbit.

#include <random>
#include <vector>

#include "pcf/dynatomic.hpp"
#include "pcf/polycore.hpp"

namespace oracle {

using pcf::IntPolynomial;

inline IntPolynomial schoolbook_mul(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<mpz_class> c(p.coeffs().size() + q.coeffs().size() - 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        for (std::size_t j = 0; j < q.coeffs().size(); ++j) c[i + j] += p.coeffs()[i] * q.coeffs()[j];
    return IntPolynomial(std::move(c));
}

/// Determinant by fraction-free Gaussian elimination.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Resultant as the determinant of the Sylvester matrix.
inline mpz_class sylvester_resultant(const IntPolynomial& p, const IntPolynomial& q) {
    const long m = p.degree(), n = q.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    const std::size_t N = static_cast<std::size_t>(m + n);
    std::vector<std::vector<mpz_class>> s(N, std::vector<mpz_class>(N));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = p.coeff(static_cast<std::size_t>(m - k));
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = q.coeff(static_cast<std::size_t>(n - k));
    return bareiss_det(std::move(s));
}

/// a_i(c0) by direct iteration of x -> x^d + c0 from 0.
inline mpz_class orbit_at(long d, long i, const mpz_class& c0) {
    mpz_class x = 0;
    for (long s = 0; s < i; ++s) {
        mpz_class y;
        mpz_pow_ui(y.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(d));
        x = y + c0;
    }
    return x;
}

/// G_d(m,n) by stripping the lower types from the orbit condition with gcds:
/// squarefree part of a_{m+n} - a_m, minus common roots with
/// a_{m-1+n} - a_{m-1} (smaller tail) and a_{m+n'} - a_m for n' | n, n' < n.
/// Valid where the true G is squarefree (all small cases).
inline IntPolynomial brute_force_gdmn(long d, long m, long n) {
    const pcf::OrbitSequence o = pcf::orbit_polys(d, static_cast<std::size_t>(m + n));
    auto a = [&](long i) { return o.at(static_cast<std::size_t>(i)); };
    IntPolynomial base = a(m + n) - a(m);
    // squarefree part: p / gcd(p, p')
    IntPolynomial sf = pcf::zx_exact_div(pcf::zx_primitive_part(base), pcf::zx_gcd(base, base.derivative()));
    auto strip = [&](const IntPolynomial& other) {
        if (other.is_zero()) return;
        for (;;) {
            IntPolynomial g = pcf::zx_gcd(sf, other);
            if (g.degree() < 1) return;
            sf = pcf::zx_exact_div(sf, g);
        }
    };
    if (m >= 1) strip(a(m - 1 + n) - a(m - 1));
    for (long np : pcf::divisors(n))
        if (np < n) strip(a(m + np) - a(m));
    if (sf.leading() < 0) sf = -sf;
    return sf;
}

inline IntPolynomial random_poly(std::mt19937_64& rng, int max_deg, long bound) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-bound, bound);
    const int n = deg(rng);
    std::vector<mpz_class> c(static_cast<std::size_t>(n + 1));
    for (auto& v : c) v = coef(rng);
    return IntPolynomial(std::move(c));
}

inline IntPolynomial random_monic(std::mt19937_64& rng, int deg, long bound) {
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<mpz_class> c(static_cast<std::size_t>(deg + 1));
    for (auto& v : c) v = coef(rng);
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

} // namespace oracle
