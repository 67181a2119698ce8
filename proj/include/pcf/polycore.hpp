#pragma once

// Dense univariate polynomials over Z and Q with GMP coefficients.
//
// Coefficients are stored in ascending degree order. The zero polynomial is
// the empty coefficient vector; every constructor and every operation
// restores this canonical form (no trailing zero coefficients).

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pcf/errors.hpp"

namespace pcf {

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(mpz_class v);
    static IntPolynomial monomial(mpz_class v, std::size_t degree);
    static IntPolynomial x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }

    /// Coefficient of x^i (zero beyond the degree).
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    mpz_class leading() const { return c_.empty() ? mpz_class(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    mpz_class eval(const mpz_class& x) const;
    IntPolynomial derivative() const;

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return !(c_ == o.c_); }

    /// Human-readable form in the variable `var`, highest degree first.
    std::string to_string(const std::string& var = "c") const;

private:
    void normalize();
    std::vector<mpz_class> c_;
};

class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<mpq_class> coeffs);
    explicit RatPolynomial(const IntPolynomial& p);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class leading() const { return c_.empty() ? mpq_class(0) : c_.back(); }

    /// True iff every coefficient is an integer.
    bool is_integral() const;
    /// Converts to IntPolynomial; throws if a coefficient is not integral.
    IntPolynomial to_int() const;
    /// Clears denominators: *this == numerator(&den) / den with den the lcm of
    /// the coefficient denominators.
    IntPolynomial numerator(mpz_class* denominator = nullptr) const;

    bool operator==(const RatPolynomial& o) const { return c_ == o.c_; }
    std::string to_string(const std::string& var = "X") const;

private:
    void normalize();
    std::vector<mpq_class> c_;
};

// Ring operations on Z[x].

/// Above this many coefficients (in both operands) multiplication switches
/// from schoolbook to Karatsuba.
inline constexpr std::size_t kKaratsubaThreshold = 32;

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator-(const IntPolynomial& p);
IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator*(const IntPolynomial& p, const mpz_class& k);

IntPolynomial zx_add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial zx_sub(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial zx_mul(const IntPolynomial& p, const IntPolynomial& q,
                     std::size_t karatsuba_threshold = kKaratsubaThreshold);
IntPolynomial zx_pow(const IntPolynomial& p, unsigned long e);

/// Exact quotient p / q over Z; throws NotDivisible when q does not divide p.
IntPolynomial zx_exact_div(const IntPolynomial& p, const IntPolynomial& q);
/// Exact division of every coefficient by k; throws NotDivisible otherwise.
IntPolynomial zx_div_scalar(const IntPolynomial& p, const mpz_class& k);

/// Remainder of p modulo a monic q (integer arithmetic throughout).
IntPolynomial zx_rem_monic(const IntPolynomial& p, const IntPolynomial& q);
/// Pseudo-remainder lc(q)^(deg p - deg q + 1) p mod q.
IntPolynomial zx_prem(const IntPolynomial& p, const IntPolynomial& q);

mpz_class zx_content(const IntPolynomial& p);
/// Primitive part with positive leading coefficient.
IntPolynomial zx_primitive_part(const IntPolynomial& p);

/// Primitive gcd with positive leading coefficient (subresultant PRS).
IntPolynomial zx_gcd(const IntPolynomial& p, const IntPolynomial& q);
/// Sylvester resultant via the subresultant PRS.
mpz_class zx_resultant(const IntPolynomial& p, const IntPolynomial& q);
/// Sylvester resultant via reduction modulo word-size primes and CRT.
mpz_class zx_resultant_modular(const IntPolynomial& p, const IntPolynomial& q);
/// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p).
mpz_class zx_discriminant(const IntPolynomial& p);

/// Composition p(q(x)).
IntPolynomial zx_compose(const IntPolynomial& p, const IntPolynomial& q);

// Q[x] helpers used by the number-field layer.
RatPolynomial qx_add(const RatPolynomial& p, const RatPolynomial& q);
RatPolynomial qx_sub(const RatPolynomial& p, const RatPolynomial& q);
RatPolynomial qx_mul(const RatPolynomial& p, const RatPolynomial& q);
void qx_divrem(const RatPolynomial& p, const RatPolynomial& q, RatPolynomial& quot,
               RatPolynomial& rem);
RatPolynomial qx_scale(const RatPolynomial& p, const mpq_class& k);

// Elementary number theory on small integers.
int moebius(long n);
std::vector<long> divisors(long n);
bool is_prime(long n);
long gcd_long(long a, long b);
/// Exact power b^e for machine integers; throws BudgetExceeded on overflow.
long ipow(long b, long e);

} // namespace pcf
