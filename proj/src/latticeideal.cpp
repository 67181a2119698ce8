#include "pcf/latticeideal.hpp"

#include <utility>

namespace pcf {

namespace {

using Column = std::vector<mpz_class>;

bool is_zero_column(const Column& c) {
    for (const auto& v : c)
        if (v != 0) return false;
    return true;
}

void reduce_column(Column& c, const mpz_class& modulus, std::size_t upto) {
    for (std::size_t r = 0; r < upto; ++r) mpz_fdiv_r(c[r].get_mpz_t(), c[r].get_mpz_t(), modulus.get_mpz_t());
}

IntMatrix columns_to_matrix(const std::vector<Column>& cols) {
    const std::size_t n = cols.size();
    IntMatrix m(n, std::vector<mpz_class>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
    return m;
}

Column element_column(const IntPolynomial& p, std::size_t n) {
    Column c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = p.coeff(i);
    return c;
}

IntPolynomial column_poly(const IntMatrix& m, std::size_t j) {
    std::vector<mpz_class> c(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
    return IntPolynomial(std::move(c));
}

LatticeIdeal from_generator_columns(const FieldPtr& field, std::vector<Column> cols, const mpz_class& modulus) {
    const std::size_t n = field->degree();
    IntMatrix gens(n, std::vector<mpz_class>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) gens[i][j] = std::move(cols[j][i]);
    return LatticeIdeal(field, hnf(gens, abs(modulus)));
}

} // namespace

IntMatrix hnf(const IntMatrix& generators, const mpz_class& modulus) {
    const std::size_t n = generators.size();
    if (n == 0) throw RankDeficient("hnf: empty matrix");
    const std::size_t k = generators[0].size();
    const bool use_mod = modulus != 0;

    std::vector<Column> active;
    active.reserve(k + (use_mod ? n : 0));
    for (std::size_t j = 0; j < k; ++j) {
        Column c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = generators[i][j];
        if (use_mod) reduce_column(c, modulus, n);
        if (!is_zero_column(c)) active.push_back(std::move(c));
    }
    if (use_mod) {
        for (std::size_t i = 0; i < n; ++i) {
            Column c(n);
            c[i] = modulus;
            active.push_back(std::move(c));
        }
    }

    std::vector<Column> placed(n);
    for (std::size_t row = n; row-- > 0;) {
        std::size_t pivot = active.size();
        for (std::size_t j = 0; j < active.size(); ++j) {
            if (active[j][row] == 0) continue;
            if (pivot == active.size()) {
                pivot = j;
                continue;
            }
            Column& P = active[pivot];
            Column& C = active[j];
            mpz_class g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), P[row].get_mpz_t(), C[row].get_mpz_t());
            const mpz_class a = P[row] / g, b = C[row] / g;
            for (std::size_t r = 0; r <= row; ++r) {
                mpz_class np = u * P[r] + v * C[r];
                mpz_class nc = a * C[r] - b * P[r];
                P[r] = std::move(np);
                C[r] = std::move(nc);
            }
            if (use_mod) {
                reduce_column(P, modulus, row);
                reduce_column(C, modulus, row + 1);
            }
        }
        if (pivot == active.size()) throw RankDeficient("hnf: generators do not span a full-rank lattice");
        Column piv = std::move(active[pivot]);
        if (piv[row] < 0)
            for (auto& v : piv) v = -v;
        if (use_mod) reduce_column(piv, modulus, row);
        placed[row] = std::move(piv);
        std::vector<Column> rest;
        rest.reserve(active.size());
        for (std::size_t j = 0; j < active.size(); ++j)
            if (j != pivot && !is_zero_column(active[j])) rest.push_back(std::move(active[j]));
        active = std::move(rest);
    }

    // Reduce entries above the diagonal into [0, H[i][i]).
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = j; i-- > 0;) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), placed[j][i].get_mpz_t(), placed[i][i].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t r = 0; r <= i; ++r) mpz_submul(placed[j][r].get_mpz_t(), q.get_mpz_t(), placed[i][r].get_mpz_t());
        }
    }
    return columns_to_matrix(placed);
}

LatticeIdeal::LatticeIdeal(FieldPtr field, IntMatrix basis) : field_(std::move(field)), basis_(std::move(basis)) {
    if (basis_.size() != field_->degree()) throw Error("LatticeIdeal: basis has the wrong dimension");
}

mpz_class LatticeIdeal::norm() const {
    mpz_class d = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) d *= basis_[i][i];
    return d;
}

LatticeIdeal ideal_from_elements(const FieldPtr& field, const std::vector<FieldElement>& elems) {
    const std::size_t n = field->degree();
    const IntPolynomial& g = field->modulus();
    std::vector<Column> cols;
    mpz_class modulus = 0;
    for (const auto& e : elems) {
        if (!e.has_integer_coords()) throw Error("ideal_from_elements: generators must lie in Z[c]/(g)");
        if (e.is_zero()) continue;
        if (modulus == 0) modulus = abs(norm(e).get_num());
        IntPolynomial p = e.to_int_poly();
        for (std::size_t k = 0; k < n; ++k) {
            cols.push_back(element_column(p, n));
            p = zx_rem_monic(p * IntPolynomial::x(), g);
        }
    }
    if (cols.empty()) throw RankDeficient("ideal_from_elements: no nonzero generator");
    return from_generator_columns(field, std::move(cols), modulus);
}

LatticeIdeal ideal_mul(const LatticeIdeal& I, const LatticeIdeal& J) {
    const std::size_t n = I.field()->degree();
    const IntPolynomial& g = I.field()->modulus();
    std::vector<Column> cols;
    cols.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        const IntPolynomial pa = column_poly(I.basis(), a);
        for (std::size_t b = 0; b < n; ++b)
            cols.push_back(element_column(zx_rem_monic(pa * column_poly(J.basis(), b), g), n));
    }
    return from_generator_columns(I.field(), std::move(cols), I.integer_multiple() * J.integer_multiple());
}

LatticeIdeal ideal_pow(const LatticeIdeal& I, unsigned long k) {
    const std::size_t n = I.field()->degree();
    IntMatrix id(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    LatticeIdeal result(I.field(), std::move(id));
    LatticeIdeal base = I;
    while (k) {
        if (k & 1UL) result = ideal_mul(result, base);
        k >>= 1;
        if (k) base = ideal_mul(base, base);
    }
    return result;
}

LatticeIdeal ideal_sum(const LatticeIdeal& I, const LatticeIdeal& J) {
    const std::size_t n = I.field()->degree();
    std::vector<Column> cols;
    for (const auto* M : {&I.basis(), &J.basis()})
        for (std::size_t j = 0; j < n; ++j) {
            Column c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = (*M)[i][j];
            cols.push_back(std::move(c));
        }
    mpz_class modulus;
    mpz_gcd(modulus.get_mpz_t(), I.integer_multiple().get_mpz_t(), J.integer_multiple().get_mpz_t());
    return from_generator_columns(I.field(), std::move(cols), modulus);
}

bool ideal_eq(const LatticeIdeal& I, const LatticeIdeal& J) { return I == J; }

mpz_class ideal_norm(const LatticeIdeal& I) { return I.norm(); }

bool ideal_contains(const LatticeIdeal& I, const FieldElement& x) {
    if (!x.has_integer_coords()) return false;
    const std::size_t n = I.field()->degree();
    const IntMatrix& H = I.basis();
    std::vector<mpz_class> y(n), v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = x.coeffs()[i].get_num();
    for (std::size_t i = n; i-- > 0;) {
        mpz_class rhs = v[i];
        for (std::size_t j = i + 1; j < n; ++j) rhs -= H[i][j] * y[j];
        if (!mpz_divisible_p(rhs.get_mpz_t(), H[i][i].get_mpz_t())) return false;
        mpz_divexact(y[i].get_mpz_t(), rhs.get_mpz_t(), H[i][i].get_mpz_t());
    }
    return true;
}

} // namespace pcf
