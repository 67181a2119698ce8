#pragma once

// Ideals of the order R = Z[c]/(g), stored as the canonical column Hermite
// normal form of a Z-basis in power-basis coordinates.
//
// These are order-level objects. Equality in R implies equality of the
// extended ideals in O_K, but the converse fails when R is not maximal, so
// an order-level mismatch never refutes an O_K statement.

#include <vector>

#include "pcf/numfield.hpp"

namespace pcf {

/// Dense integer matrix, row-major: m[row][col].
using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Canonical column HNF of the lattice spanned by the columns of `generators`
/// (N rows). The result is N x N upper triangular with positive diagonal and
/// 0 <= H[i][j] < H[i][i] for j > i. When `modulus` is nonzero it must be a
/// multiple of the lattice determinant; entries are then kept reduced modulo
/// it. Throws RankDeficient when the columns do not span a full-rank lattice.
IntMatrix hnf(const IntMatrix& generators, const mpz_class& modulus = 0);

class LatticeIdeal {
public:
    LatticeIdeal(FieldPtr field, IntMatrix basis);

    const FieldPtr& field() const { return field_; }
    const IntMatrix& basis() const { return basis_; }
    /// Index [R : I], the product of the diagonal.
    mpz_class norm() const;
    /// Smallest positive integer in the ideal divides this; used as the
    /// working modulus for products and sums.
    const mpz_class& integer_multiple() const { return basis_[0][0]; }

    bool operator==(const LatticeIdeal& o) const { return basis_ == o.basis_; }

private:
    FieldPtr field_;
    IntMatrix basis_;
};

LatticeIdeal ideal_from_elements(const FieldPtr& field, const std::vector<FieldElement>& elems);
LatticeIdeal ideal_mul(const LatticeIdeal& I, const LatticeIdeal& J);
LatticeIdeal ideal_pow(const LatticeIdeal& I, unsigned long k);
LatticeIdeal ideal_sum(const LatticeIdeal& I, const LatticeIdeal& J);
bool ideal_eq(const LatticeIdeal& I, const LatticeIdeal& J);
mpz_class ideal_norm(const LatticeIdeal& I);
bool ideal_contains(const LatticeIdeal& I, const FieldElement& x);

} // namespace pcf
