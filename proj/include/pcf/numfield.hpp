#pragma once

// Arithmetic in K = Q[c]/(g) for monic irreducible g, and exact
// element-level certificates for ideal statements in O_K.
//
// Every O_K statement is reduced to a statement about a single element:
//   x in O_K               <=> charpoly(x) in Z[X]
//   x in O_K^*             <=> x in O_K and |N(x)| = 1
//   (a)^A = (t)            <=> a^A / t in O_K^*
//   (a) | (t)              <=> t / a in O_K
// so no maximal order is ever computed.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcf/polycore.hpp"

namespace pcf {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField {
public:
    /// Checks g is monic of degree >= 1 and irreducible (throws Reducible).
    static FieldPtr create(const IntPolynomial& g);
    /// Skips the irreducibility test; for callers that obtained g from factor_z.
    static FieldPtr create_trusted(const IntPolynomial& g);

    const IntPolynomial& modulus() const { return g_; }
    std::size_t degree() const { return static_cast<std::size_t>(g_.degree()); }

private:
    explicit NumberField(IntPolynomial g) : g_(std::move(g)) {}
    IntPolynomial g_;
};

FieldPtr field_new(const IntPolynomial& g);

class FieldElement {
public:
    FieldElement(FieldPtr field, std::vector<mpq_class> coeffs);
    /// Reduces an integer polynomial in c modulo g.
    static FieldElement from_poly(FieldPtr field, const IntPolynomial& p);
    static FieldElement from_int(FieldPtr field, const mpz_class& v);

    const FieldPtr& field() const { return field_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    /// All power-basis coordinates are integers (the element lies in Z[c]/(g)).
    bool has_integer_coords() const;
    /// Representative as an integer polynomial; requires integer coordinates.
    IntPolynomial to_int_poly() const;
    RatPolynomial to_rat_poly() const { return RatPolynomial(coeffs_); }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<mpq_class> coeffs_;
};

FieldElement elem_add(const FieldElement& x, const FieldElement& y);
FieldElement elem_sub(const FieldElement& x, const FieldElement& y);
FieldElement elem_mul(const FieldElement& x, const FieldElement& y);
FieldElement elem_neg(const FieldElement& x);
/// Inverse via the extended Euclidean algorithm over Q; throws DivisionByZero.
FieldElement elem_inv(const FieldElement& x);
FieldElement elem_pow(const FieldElement& x, unsigned long e);
FieldElement elem_scale(const FieldElement& x, const mpq_class& k);

/// e_0 = 0, e_{i+1} = e_i^d + c, reduced modulo g; returns e_0 .. e_upto.
std::vector<FieldElement> orbit_residues(const FieldPtr& field, long d, std::size_t upto);

enum class CharpolyMethod { Resultant, Matrix };

/// Characteristic polynomial of multiplication by x (monic, degree N).
RatPolynomial charpoly(const FieldElement& x, CharpolyMethod method = CharpolyMethod::Resultant);

/// Characteristic polynomial of an integer-coordinate element, computed
/// modulo `modulus` (> 0) by the division-free Berkowitz recurrence.
IntPolynomial charpoly_mod(const FieldElement& x, const mpz_class& modulus);

struct IntegralityCertificate {
    FieldElement subject;
    RatPolynomial charpoly;
    bool integral = false;
    mpq_class norm;
};

mpq_class norm(const FieldElement& x);
IntegralityCertificate is_integral(const FieldElement& x);
bool is_unit(const FieldElement& x);

struct Certificate {
    bool certified = false;
    /// Which sub-check failed (empty when certified).
    std::string reason;
    /// Additional data: norms, exponents, failing coefficient index.
    std::string witness;

    explicit operator bool() const { return certified; }
};

/// (a)^A = (t) in O_K. `a` must have integer coordinates.
Certificate power_equals_certificate(const FieldElement& a, unsigned long A, const mpz_class& t);
/// (a) | (t) in O_K, i.e. t / a is integral.
Certificate divides_certificate(const FieldElement& a, const mpz_class& t);
/// x and y generate the same ideal of O_K.
Certificate associate_certificate(const FieldElement& x, const FieldElement& y);

/// The unique A > 0 with (a)^A = (t), when it exists.
std::optional<unsigned long> exponent_for_power(const FieldElement& a, const mpz_class& t);

} // namespace pcf
