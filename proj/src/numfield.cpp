#include "pcf/numfield.hpp"

#include <cmath>

#include "pcf/zfactor.hpp"

namespace pcf {

namespace {

void require_same_field(const FieldElement& x, const FieldElement& y) {
    if (x.field() != y.field() && x.field()->modulus() != y.field()->modulus())
        throw FieldMismatch("field elements belong to different fields");
}

// x = numerator / den with numerator an integer polynomial of degree < N.
IntPolynomial split_denominator(const FieldElement& x, mpz_class& den) {
    return x.to_rat_poly().numerator(&den);
}

FieldElement from_scaled(const FieldPtr& field, const IntPolynomial& num, const mpz_class& den) {
    const IntPolynomial r = zx_rem_monic(num, field->modulus());
    std::vector<mpq_class> c(field->degree());
    for (std::size_t i = 0; i < r.size(); ++i) {
        c[i] = mpq_class(r[i], den);
        c[i].canonicalize();
    }
    return FieldElement(field, std::move(c));
}

// Columns are h * c^j mod g in the power basis.
std::vector<std::vector<mpz_class>> multiplication_matrix(const IntPolynomial& h, const IntPolynomial& g) {
    const std::size_t n = static_cast<std::size_t>(g.degree());
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    IntPolynomial col = zx_rem_monic(h, g);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coeff(i);
        col = zx_rem_monic(col * IntPolynomial::x(), g);
    }
    return m;
}

// Berkowitz: coefficients of det(X I - A), highest degree first. With a
// nonzero modulus every intermediate value is reduced into [0, modulus).
std::vector<mpz_class> berkowitz(const std::vector<std::vector<mpz_class>>& A, const mpz_class& modulus) {
    const std::size_t n = A.size();
    const bool reduce = modulus != 0;
    auto red = [&](mpz_class& v) {
        if (reduce) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    };
    std::vector<mpz_class> p{1};
    for (std::size_t r = 1; r <= n; ++r) {
        const std::size_t k = r - 1; // size of the leading block
        std::vector<mpz_class> q(r + 1);
        q[0] = 1;
        q[1] = -A[k][k];
        red(q[1]);
        if (k > 0) {
            std::vector<mpz_class> v(k), w(k);
            for (std::size_t i = 0; i < k; ++i) v[i] = A[i][k];
            for (std::size_t s = 0; s + 2 <= r; ++s) {
                // q[s + 2] = -R * A_k^s * C
                mpz_class dot = 0;
                for (std::size_t i = 0; i < k; ++i) mpz_addmul(dot.get_mpz_t(), A[k][i].get_mpz_t(), v[i].get_mpz_t());
                q[s + 2] = -dot;
                red(q[s + 2]);
                if (s + 3 > r) break;
                for (std::size_t i = 0; i < k; ++i) {
                    mpz_class acc = 0;
                    for (std::size_t j = 0; j < k; ++j) mpz_addmul(acc.get_mpz_t(), A[i][j].get_mpz_t(), v[j].get_mpz_t());
                    red(acc);
                    w[i] = std::move(acc);
                }
                std::swap(v, w);
            }
        }
        std::vector<mpz_class> next(r + 1);
        for (std::size_t i = 0; i <= r; ++i) {
            mpz_class acc = 0;
            for (std::size_t j = 0; j <= std::min(i, r - 1); ++j)
                mpz_addmul(acc.get_mpz_t(), q[i - j].get_mpz_t(), p[j].get_mpz_t());
            red(acc);
            next[i] = std::move(acc);
        }
        p = std::move(next);
    }
    return p;
}

IntPolynomial from_highest_first(const std::vector<mpz_class>& v) {
    std::vector<mpz_class> c(v.rbegin(), v.rend());
    return IntPolynomial(std::move(c));
}

// charpoly of the integer polynomial h as an element of Z[c]/(g):
// chi(X) = Res_c(g(c), X - h(c)), by evaluation at 0..N and interpolation.
IntPolynomial charpoly_int_resultant(const IntPolynomial& h, const IntPolynomial& g) {
    const std::size_t n = static_cast<std::size_t>(g.degree());
    std::vector<mpq_class> xs(n + 1), dd(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        xs[i] = static_cast<unsigned long>(i);
        const IntPolynomial q = IntPolynomial::constant(mpz_class(static_cast<unsigned long>(i))) - h;
        dd[i] = mpq_class(zx_resultant(g, q));
    }
    // Newton divided differences.
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t i = n; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    RatPolynomial acc(std::vector<mpq_class>{dd[n]});
    for (std::size_t i = n; i-- > 0;) {
        acc = qx_mul(acc, RatPolynomial(std::vector<mpq_class>{-xs[i], 1}));
        acc = qx_add(acc, RatPolynomial(std::vector<mpq_class>{dd[i]}));
    }
    return acc.to_int();
}

// chi_{h/D}(X) = D^-N chi_h(D X).
RatPolynomial rescale_charpoly(const IntPolynomial& chi_h, const mpz_class& den, std::size_t n) {
    std::vector<mpq_class> c(n + 1);
    mpz_class dk = 1, dn;
    mpz_pow_ui(dn.get_mpz_t(), den.get_mpz_t(), n);
    for (std::size_t k = 0; k <= n; ++k) {
        c[k] = mpq_class(chi_h.coeff(k) * dk, dn);
        c[k].canonicalize();
        dk *= den;
    }
    return RatPolynomial(std::move(c));
}

mpz_class abs_pow(const mpz_class& b, unsigned long e) {
    mpz_class r, a = abs(b);
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

} // namespace

// ------------------------------------------------------------------ fields

FieldPtr NumberField::create(const IntPolynomial& g) {
    if (g.degree() < 1) throw Error("NumberField: modulus must have degree >= 1");
    if (!g.is_monic()) throw NotMonic("NumberField: modulus must be monic: " + g.to_string());
    if (!is_irreducible_z(g)) throw Reducible("NumberField: modulus is reducible: " + g.to_string());
    return create_trusted(g);
}

FieldPtr NumberField::create_trusted(const IntPolynomial& g) {
    if (g.degree() < 1 || !g.is_monic()) throw NotMonic("NumberField: modulus must be monic of degree >= 1");
    return FieldPtr(new NumberField(g));
}

FieldPtr field_new(const IntPolynomial& g) { return NumberField::create(g); }

// ------------------------------------------------------------------ elements

FieldElement::FieldElement(FieldPtr field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_->degree()) throw Error("FieldElement: coordinate vector has the wrong length");
    for (auto& v : coeffs_) v.canonicalize();
}

FieldElement FieldElement::from_poly(FieldPtr field, const IntPolynomial& p) {
    return from_scaled(field, p, 1);
}

FieldElement FieldElement::from_int(FieldPtr field, const mpz_class& v) {
    std::vector<mpq_class> c(field->degree());
    c[0] = v;
    return FieldElement(std::move(field), std::move(c));
}

bool FieldElement::is_zero() const {
    for (const auto& v : coeffs_)
        if (v != 0) return false;
    return true;
}

bool FieldElement::has_integer_coords() const {
    for (const auto& v : coeffs_)
        if (v.get_den() != 1) return false;
    return true;
}

IntPolynomial FieldElement::to_int_poly() const { return to_rat_poly().to_int(); }

bool FieldElement::operator==(const FieldElement& o) const {
    return field_->modulus() == o.field_->modulus() && coeffs_ == o.coeffs_;
}

std::string FieldElement::to_string() const { return to_rat_poly().to_string("c"); }

FieldElement elem_add(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    std::vector<mpq_class> c(x.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs()[i];
    return FieldElement(x.field(), std::move(c));
}

FieldElement elem_sub(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    std::vector<mpq_class> c(x.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= y.coeffs()[i];
    return FieldElement(x.field(), std::move(c));
}

FieldElement elem_neg(const FieldElement& x) { return elem_scale(x, -1); }

FieldElement elem_scale(const FieldElement& x, const mpq_class& k) {
    std::vector<mpq_class> c(x.coeffs());
    for (auto& v : c) v *= k;
    return FieldElement(x.field(), std::move(c));
}

FieldElement elem_mul(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    mpz_class dx, dy;
    const IntPolynomial nx = split_denominator(x, dx), ny = split_denominator(y, dy);
    return from_scaled(x.field(), zx_mul(nx, ny), dx * dy);
}

FieldElement elem_pow(const FieldElement& x, unsigned long e) {
    FieldElement result = FieldElement::from_int(x.field(), 1);
    FieldElement base = x;
    while (e) {
        if (e & 1UL) result = elem_mul(result, base);
        e >>= 1;
        if (e) base = elem_mul(base, base);
    }
    return result;
}

FieldElement elem_inv(const FieldElement& x) {
    if (x.is_zero()) throw DivisionByZero("elem_inv: inverse of zero");
    // s * x + t * g = 1 over Q; track only s.
    RatPolynomial r0(x.field()->modulus()), r1 = x.to_rat_poly();
    RatPolynomial s0, s1(std::vector<mpq_class>{1});
    while (r1.degree() > 0) {
        RatPolynomial q, r;
        qx_divrem(r0, r1, q, r);
        RatPolynomial s2 = qx_sub(s0, qx_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.is_zero()) throw DivisionByZero("elem_inv: element shares a factor with the modulus");
    RatPolynomial inv = qx_scale(s1, 1 / r1.coeff(0));
    mpz_class den;
    const IntPolynomial num = inv.numerator(&den);
    return from_scaled(x.field(), num, den);
}

std::vector<FieldElement> orbit_residues(const FieldPtr& field, long d, std::size_t upto) {
    if (d < 2) throw Error("orbit_residues: degree d must be at least 2");
    const IntPolynomial& g = field->modulus();
    const IntPolynomial c = zx_rem_monic(IntPolynomial::x(), g);
    std::vector<FieldElement> out;
    out.reserve(upto + 1);
    IntPolynomial e;
    out.push_back(FieldElement::from_poly(field, e));
    for (std::size_t i = 1; i <= upto; ++i) {
        IntPolynomial pw = IntPolynomial::constant(1), base = e;
        for (unsigned long k = static_cast<unsigned long>(d); k; k >>= 1) {
            if (k & 1UL) pw = zx_rem_monic(pw * base, g);
            if (k > 1) base = zx_rem_monic(base * base, g);
        }
        e = zx_rem_monic(pw + c, g);
        out.push_back(FieldElement::from_poly(field, e));
    }
    return out;
}

// ------------------------------------------------------------------ charpoly

RatPolynomial charpoly(const FieldElement& x, CharpolyMethod method) {
    mpz_class den;
    const IntPolynomial h = split_denominator(x, den);
    const IntPolynomial& g = x.field()->modulus();
    IntPolynomial chi;
    if (method == CharpolyMethod::Resultant)
        chi = charpoly_int_resultant(h, g);
    else
        chi = from_highest_first(berkowitz(multiplication_matrix(h, g), 0));
    return rescale_charpoly(chi, den, x.field()->degree());
}

IntPolynomial charpoly_mod(const FieldElement& x, const mpz_class& modulus) {
    if (modulus <= 0) throw Error("charpoly_mod: modulus must be positive");
    if (!x.has_integer_coords()) throw Error("charpoly_mod: element must have integer coordinates");
    auto m = multiplication_matrix(x.to_int_poly(), x.field()->modulus());
    for (auto& row : m)
        for (auto& v : row) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    return from_highest_first(berkowitz(m, modulus));
}

mpq_class norm(const FieldElement& x) {
    mpz_class den;
    const IntPolynomial h = split_denominator(x, den);
    if (h.is_zero()) return 0;
    // N(h) = Res(g, h) for monic g.
    mpz_class dn;
    mpz_pow_ui(dn.get_mpz_t(), den.get_mpz_t(), x.field()->degree());
    mpq_class out(zx_resultant(x.field()->modulus(), h), dn);
    out.canonicalize();
    return out;
}

IntegralityCertificate is_integral(const FieldElement& x) {
    IntegralityCertificate cert{x, charpoly(x), false, 0};
    cert.integral = cert.charpoly.is_integral();
    cert.norm = cert.charpoly.coeff(0);
    if (x.field()->degree() & 1) cert.norm = -cert.norm;
    return cert;
}

bool is_unit(const FieldElement& x) {
    if (x.is_zero()) return false;
    if (x.has_integer_coords()) return abs(norm(x)) == 1;
    const IntegralityCertificate cert = is_integral(x);
    return cert.integral && abs(cert.norm) == 1;
}

// ------------------------------------------------------------------ certificates

Certificate power_equals_certificate(const FieldElement& a, unsigned long A, const mpz_class& t) {
    if (!a.has_integer_coords()) throw Error("power_equals_certificate: element must have integer coordinates");
    if (t == 0) throw DivisionByZero("power_equals_certificate: t = 0");
    Certificate out;
    const std::size_t n = a.field()->degree();
    const mpq_class na = norm(a);
    const mpz_class lhs = abs_pow(na.get_num(), A);
    const mpz_class rhs = abs_pow(t, static_cast<unsigned long>(n));
    out.witness = "N(a)=" + na.get_str() + " A=" + std::to_string(A) + " t=" + t.get_str() + " N=" + std::to_string(n);
    if (lhs != rhs) {
        out.reason = "norm mismatch: |N(a)|^A != |t|^N";
        return out;
    }
    // u = a^A / t is integral iff t^(N-k) divides coefficient k of charpoly(a^A).
    const mpz_class modulus = rhs;
    const IntPolynomial& g = a.field()->modulus();
    IntPolynomial b = IntPolynomial::constant(1), base = a.to_int_poly();
    auto reduce = [&](IntPolynomial p) {
        p = zx_rem_monic(p, g);
        std::vector<mpz_class> c(p.coeffs());
        for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
        return IntPolynomial(std::move(c));
    };
    for (unsigned long e = A; e; e >>= 1) {
        if (e & 1UL) b = reduce(b * base);
        if (e > 1) base = reduce(base * base);
    }
    const IntPolynomial chi = charpoly_mod(FieldElement::from_poly(a.field(), b), modulus);
    const mpz_class at = abs(t);
    for (std::size_t k = 0; k < n; ++k) {
        mpz_class tk;
        mpz_pow_ui(tk.get_mpz_t(), at.get_mpz_t(), static_cast<unsigned long>(n - k));
        if (!mpz_divisible_p(chi.coeff(k).get_mpz_t(), tk.get_mpz_t())) {
            out.reason = "a^A/t is not integral";
            out.witness += " coefficient=" + std::to_string(k);
            return out;
        }
    }
    out.certified = true;
    return out;
}

Certificate divides_certificate(const FieldElement& a, const mpz_class& t) {
    if (a.is_zero()) throw DivisionByZero("divides_certificate: a = 0");
    if (!a.has_integer_coords()) throw Error("divides_certificate: element must have integer coordinates");
    const std::size_t n = a.field()->degree();
    const IntPolynomial chi = charpoly(a).to_int();
    // charpoly(t/a) has coefficient c_k t^k / c_0 at X^(N-k).
    const mpz_class& c0 = chi[0];
    std::vector<mpq_class> c(n + 1);
    mpz_class tk = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        c[n - k] = mpq_class(chi.coeff(k) * tk, c0);
        c[n - k].canonicalize();
        tk *= t;
    }
    const RatPolynomial chi_q(std::move(c));
    Certificate out;
    out.witness = "charpoly(t/a)=" + chi_q.to_string();
    if (chi_q.is_integral()) {
        out.certified = true;
    } else {
        out.reason = "t/a is not integral";
    }
    return out;
}

Certificate associate_certificate(const FieldElement& x, const FieldElement& y) {
    require_same_field(x, y);
    if (x.is_zero() || y.is_zero()) throw DivisionByZero("associate_certificate: zero element");
    const FieldElement ratio = elem_mul(x, elem_inv(y));
    const IntegralityCertificate cert = is_integral(ratio);
    Certificate out;
    out.witness = "N(x/y)=" + cert.norm.get_str();
    if (!cert.integral) {
        out.reason = "x/y is not integral";
    } else if (abs(cert.norm) != 1) {
        out.reason = "x/y is not a unit";
    } else {
        out.certified = true;
    }
    return out;
}

std::optional<unsigned long> exponent_for_power(const FieldElement& a, const mpz_class& t) {
    if (a.is_zero()) throw DivisionByZero("exponent_for_power: a = 0");
    if (t < 2) throw Error("exponent_for_power: t must be at least 2");
    const mpz_class r = abs(norm(a).get_num());
    if (r == 1) return std::nullopt;
    const unsigned long n = a.field()->degree();
    // |N(a)|^A = t^N has at most one real solution A = N log t / log r.
    long et = 0, er = 0;
    const double mt = mpz_get_d_2exp(&et, t.get_mpz_t());
    const double mr = mpz_get_d_2exp(&er, r.get_mpz_t());
    const double lt = std::log(mt) + static_cast<double>(et) * std::log(2.0);
    const double lr = std::log(mr) + static_cast<double>(er) * std::log(2.0);
    const double estimate = static_cast<double>(n) * lt / lr;
    if (!(estimate >= 0.5) || estimate > 1e12) return std::nullopt;
    const auto A = static_cast<unsigned long>(std::llround(estimate));
    if (abs_pow(r, A) != abs_pow(t, n)) return std::nullopt;
    if (!power_equals_certificate(a, A, t)) return std::nullopt;
    return A;
}

} // namespace pcf
