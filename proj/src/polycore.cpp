#include "pcf/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "pcf/modp.hpp"

namespace pcf {

namespace {

using Coeffs = std::vector<mpz_class>;

void strip(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void schoolbook(const mpz_class* a, std::size_t na, const mpz_class* b, std::size_t nb,
                mpz_class* out) {
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
}

// out must hold na + nb - 1 zero-initialized entries.
void karatsuba(const mpz_class* a, std::size_t na, const mpz_class* b, std::size_t nb,
               mpz_class* out, std::size_t threshold) {
    if (na == 0 || nb == 0) return;
    if (std::min(na, nb) < threshold) {
        schoolbook(a, na, b, nb, out);
        return;
    }
    const std::size_t h = std::max(na, nb) / 2;
    if (nb <= h || na <= h) {
        // Unbalanced: split only the longer operand.
        if (na < nb) {
            std::swap(a, b);
            std::swap(na, nb);
        }
        karatsuba(a, h, b, nb, out, threshold);
        karatsuba(a + h, na - h, b, nb, out + h, threshold);
        return;
    }
    const std::size_t na1 = na - h, nb1 = nb - h;
    Coeffs z0(2 * h - 1), z2(na1 + nb1 - 1);
    karatsuba(a, h, b, h, z0.data(), threshold);
    karatsuba(a + h, na1, b + h, nb1, z2.data(), threshold);

    Coeffs sa(std::max(h, na1)), sb(std::max(h, nb1));
    for (std::size_t i = 0; i < h; ++i) sa[i] = a[i];
    for (std::size_t i = 0; i < na1; ++i) sa[i] += a[h + i];
    for (std::size_t i = 0; i < h; ++i) sb[i] = b[i];
    for (std::size_t i = 0; i < nb1; ++i) sb[i] += b[h + i];
    Coeffs z1(sa.size() + sb.size() - 1);
    karatsuba(sa.data(), sa.size(), sb.data(), sb.size(), z1.data(), threshold);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

    for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i) out[i + h] += z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] += z2[i];
}

std::string term_string(const std::string& var, std::size_t i) {
    if (i == 0) return "";
    if (i == 1) return var;
    return var + "^" + std::to_string(i);
}

template <class T>
std::string poly_string(const std::vector<T>& c, const std::string& var) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        const T& v = c[k];
        if (v == 0) continue;
        T mag = abs(v);
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) {
            os << mag;
            if (k > 0) os << "*";
        }
        os << term_string(var, k);
    }
    return os.str();
}

} // namespace

// ---------------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPolynomial IntPolynomial::constant(mpz_class v) { return IntPolynomial(Coeffs{std::move(v)}); }

IntPolynomial IntPolynomial::monomial(mpz_class v, std::size_t degree) {
    Coeffs c(degree + 1);
    c[degree] = std::move(v);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() { strip(c_); }

mpz_class IntPolynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    Coeffs d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

std::string IntPolynomial::to_string(const std::string& var) const { return poly_string(c_, var); }

// ---------------------------------------------------------------- RatPolynomial

RatPolynomial::RatPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& v : c_) v.canonicalize();
    normalize();
}

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
    c_.reserve(p.size());
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

void RatPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool RatPolynomial::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& v) { return v.get_den() == 1; });
}

IntPolynomial RatPolynomial::to_int() const {
    if (!is_integral()) throw NotDivisible("rational polynomial has non-integral coefficients");
    Coeffs c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v.get_num());
    return IntPolynomial(std::move(c));
}

IntPolynomial RatPolynomial::numerator(mpz_class* denominator) const {
    mpz_class den = 1;
    for (const auto& v : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    Coeffs c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v.get_num() * (den / v.get_den()));
    if (denominator) *denominator = den;
    return IntPolynomial(std::move(c));
}

std::string RatPolynomial::to_string(const std::string& var) const { return poly_string(c_, var); }

// ---------------------------------------------------------------- Z[x] ring ops

IntPolynomial zx_add(const IntPolynomial& p, const IntPolynomial& q) {
    Coeffs c(std::max(p.size(), q.size()));
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = p[i];
    for (std::size_t i = 0; i < q.size(); ++i) c[i] += q[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial zx_sub(const IntPolynomial& p, const IntPolynomial& q) {
    Coeffs c(std::max(p.size(), q.size()));
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = p[i];
    for (std::size_t i = 0; i < q.size(); ++i) c[i] -= q[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial zx_mul(const IntPolynomial& p, const IntPolynomial& q, std::size_t karatsuba_threshold) {
    if (p.is_zero() || q.is_zero()) return {};
    Coeffs c(p.size() + q.size() - 1);
    karatsuba(p.coeffs().data(), p.size(), q.coeffs().data(), q.size(), c.data(),
              std::max<std::size_t>(karatsuba_threshold, 2));
    return IntPolynomial(std::move(c));
}

IntPolynomial zx_pow(const IntPolynomial& p, unsigned long e) {
    IntPolynomial result = IntPolynomial::constant(1);
    IntPolynomial base = p;
    while (e > 0) {
        if (e & 1UL) result = zx_mul(result, base);
        e >>= 1;
        if (e) base = zx_mul(base, base);
    }
    return result;
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) { return zx_add(p, q); }
IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) { return zx_sub(p, q); }
IntPolynomial operator-(const IntPolynomial& p) {
    Coeffs c(p.coeffs());
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
}
IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) { return zx_mul(p, q); }
IntPolynomial operator*(const IntPolynomial& p, const mpz_class& k) {
    Coeffs c(p.coeffs());
    for (auto& v : c) v *= k;
    return IntPolynomial(std::move(c));
}

IntPolynomial zx_exact_div(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) throw DivisionByZero("zx_exact_div: division by the zero polynomial");
    if (p.is_zero()) return {};
    if (p.degree() < q.degree())
        throw NotDivisible("zx_exact_div: degree of divisor exceeds degree of dividend");
    Coeffs r(p.coeffs());
    const std::size_t dq = static_cast<std::size_t>(q.degree());
    const std::size_t dp = static_cast<std::size_t>(p.degree());
    const mpz_class& lc = q.coeffs().back();
    Coeffs quot(dp - dq + 1);
    mpz_class t;
    for (std::size_t k = dp - dq + 1; k-- > 0;) {
        const mpz_class& top = r[k + dq];
        if (top != 0) {
            if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()))
                throw NotDivisible("zx_exact_div: " + p.to_string() + " is not divisible by " + q.to_string());
            mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
            quot[k] = t;
            for (std::size_t j = 0; j <= dq; ++j)
                mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), q[j].get_mpz_t());
        }
    }
    for (std::size_t j = 0; j < dq; ++j)
        if (r[j] != 0)
            throw NotDivisible("zx_exact_div: " + p.to_string() + " is not divisible by " + q.to_string());
    return IntPolynomial(std::move(quot));
}

IntPolynomial zx_div_scalar(const IntPolynomial& p, const mpz_class& k) {
    if (k == 0) throw DivisionByZero("zx_div_scalar: division by zero");
    Coeffs c(p.coeffs());
    for (auto& v : c) {
        if (!mpz_divisible_p(v.get_mpz_t(), k.get_mpz_t()))
            throw NotDivisible("zx_div_scalar: coefficient not divisible by " + k.get_str());
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial zx_rem_monic(const IntPolynomial& p, const IntPolynomial& q) {
    if (!q.is_monic()) throw NotMonic("zx_rem_monic: modulus must be monic");
    if (p.degree() < q.degree()) return p;
    Coeffs r(p.coeffs());
    const std::size_t dq = static_cast<std::size_t>(q.degree());
    for (std::size_t k = r.size(); k-- > dq;) {
        if (r[k] == 0) continue;
        const mpz_class t = r[k];
        for (std::size_t j = 0; j <= dq; ++j) mpz_submul(r[k - dq + j].get_mpz_t(), t.get_mpz_t(), q[j].get_mpz_t());
    }
    r.resize(dq);
    return IntPolynomial(std::move(r));
}

IntPolynomial zx_prem(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) throw DivisionByZero("zx_prem: division by the zero polynomial");
    if (p.degree() < q.degree()) return p;
    Coeffs r(p.coeffs());
    const std::size_t dq = static_cast<std::size_t>(q.degree());
    const mpz_class& lc = q.coeffs().back();
    for (std::size_t k = r.size(); k-- > dq;) {
        const mpz_class t = r[k];
        for (auto& v : r) v *= lc;
        for (std::size_t j = 0; j <= dq; ++j) mpz_submul(r[k - dq + j].get_mpz_t(), t.get_mpz_t(), q[j].get_mpz_t());
        r.pop_back();
    }
    return IntPolynomial(std::move(r));
}

mpz_class zx_content(const IntPolynomial& p) {
    mpz_class g = 0;
    for (const auto& v : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial zx_primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return {};
    mpz_class g = zx_content(p);
    if (p.leading() < 0) g = -g;
    return zx_div_scalar(p, g);
}

IntPolynomial zx_gcd(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() && q.is_zero()) throw DivisionByZero("zx_gcd: both arguments are zero");
    if (p.is_zero()) return zx_primitive_part(q);
    if (q.is_zero()) return zx_primitive_part(p);
    IntPolynomial a = zx_primitive_part(p), b = zx_primitive_part(q);
    if (a.degree() < b.degree()) std::swap(a, b);
    mpz_class g = 1, h = 1;
    while (true) {
        const long delta = a.degree() - b.degree();
        IntPolynomial r = zx_prem(a, b);
        if (r.is_zero()) return zx_primitive_part(b);
        if (r.degree() == 0) return IntPolynomial::constant(1);
        a = std::move(b);
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        b = zx_div_scalar(r, g * hd);
        g = a.leading();
        // h <- g^delta / h^(delta - 1)
        mpz_class gd, hd1;
        mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
        mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
        mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
}

mpz_class zx_resultant(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return 0;
    IntPolynomial a = p, b = q;
    mpz_class s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    }
    if (b.degree() == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), static_cast<unsigned long>(a.degree()));
        return s * r;
    }
    mpz_class ca = zx_content(a), cb = zx_content(b);
    a = zx_div_scalar(a, ca);
    b = zx_div_scalar(b, cb);
    mpz_class t, t2;
    mpz_pow_ui(t.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(b.degree()));
    mpz_pow_ui(t2.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(a.degree()));
    t *= t2;
    mpz_class g = 1, h = 1;
    while (true) {
        const long delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        IntPolynomial r = zx_prem(a, b);
        a = std::move(b);
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        b = r.is_zero() ? IntPolynomial{} : zx_div_scalar(r, g * hd);
        g = a.leading();
        mpz_class gd, hd1;
        mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
        mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
        mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
        if (b.degree() > 0) continue;
        if (b.is_zero()) return 0;
        // h <- lc(b)^deg(a) / h^(deg(a) - 1)
        const auto da = static_cast<unsigned long>(a.degree());
        mpz_class lb, hh;
        mpz_pow_ui(lb.get_mpz_t(), b[0].get_mpz_t(), da);
        mpz_pow_ui(hh.get_mpz_t(), h.get_mpz_t(), da - 1);
        mpz_divexact(h.get_mpz_t(), lb.get_mpz_t(), hh.get_mpz_t());
        return s * t * h;
    }
}

namespace {

mpz_class norm2_ceil(const IntPolynomial& p) {
    mpz_class s = 0;
    for (const auto& v : p.coeffs()) s += v * v;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (r * r < s) ++r;
    return r;
}

} // namespace

mpz_class zx_resultant_modular(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return 0;
    // Hadamard: |Res| <= |p|_2^deg q * |q|_2^deg p.
    mpz_class bound, t;
    mpz_pow_ui(bound.get_mpz_t(), norm2_ceil(p).get_mpz_t(), static_cast<unsigned long>(q.degree()));
    mpz_pow_ui(t.get_mpz_t(), norm2_ceil(q).get_mpz_t(), static_cast<unsigned long>(p.degree()));
    bound *= t;
    bound = 2 * bound + 1;

    mpz_class modulus = 1, residue = 0;
    mpz_class prime = (mpz_class(1) << 61) - 1;
    while (modulus < bound) {
        do prime -= 2;
        while (mpz_probab_prime_p(prime.get_mpz_t(), 30) == 0);
        const std::uint64_t pr = prime.get_ui();
        modp::Field F{pr};
        if (F.reduce(p.leading()) == 0 || F.reduce(q.leading()) == 0) continue;
        const std::uint64_t r = modp::resultant(modp::from_int(p, F), modp::from_int(q, F), F);
        // CRT: residue + modulus * k == r (mod pr)
        const std::uint64_t cur = F.reduce(residue);
        const std::uint64_t minv = F.inv(F.reduce(modulus));
        const std::uint64_t k = F.mul(F.sub(r, cur), minv);
        residue += modulus * mpz_class(static_cast<unsigned long>(k));
        modulus *= prime;
    }
    if (residue > modulus / 2) residue -= modulus;
    return residue;
}

mpz_class zx_discriminant(const IntPolynomial& p) {
    if (p.degree() < 1) throw Error("zx_discriminant: degree must be at least 1");
    const long n = p.degree();
    mpz_class r = zx_resultant(p, p.derivative());
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
    if (((n * (n - 1)) / 2) & 1) out = -out;
    return out;
}

IntPolynomial zx_compose(const IntPolynomial& p, const IntPolynomial& q) {
    IntPolynomial acc;
    for (std::size_t k = p.size(); k-- > 0;) acc = zx_mul(acc, q) + IntPolynomial::constant(p[k]);
    return acc;
}

// ---------------------------------------------------------------- Q[x]

RatPolynomial qx_add(const RatPolynomial& p, const RatPolynomial& q) {
    std::vector<mpq_class> c(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
    return RatPolynomial(std::move(c));
}

RatPolynomial qx_sub(const RatPolynomial& p, const RatPolynomial& q) {
    std::vector<mpq_class> c(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) - q.coeff(i);
    return RatPolynomial(std::move(c));
}

RatPolynomial qx_mul(const RatPolynomial& p, const RatPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    // Multiply numerators over Z and rescale once.
    mpz_class dp, dq;
    IntPolynomial np = p.numerator(&dp), nq = q.numerator(&dq);
    IntPolynomial prod = zx_mul(np, nq);
    const mpz_class den = dp * dq;
    std::vector<mpq_class> c;
    c.reserve(prod.size());
    for (const auto& v : prod.coeffs()) c.emplace_back(v, den);
    return RatPolynomial(std::move(c));
}

RatPolynomial qx_scale(const RatPolynomial& p, const mpq_class& k) {
    std::vector<mpq_class> c(p.coeffs());
    for (auto& v : c) v *= k;
    return RatPolynomial(std::move(c));
}

void qx_divrem(const RatPolynomial& p, const RatPolynomial& q, RatPolynomial& quot, RatPolynomial& rem) {
    if (q.is_zero()) throw DivisionByZero("qx_divrem: division by the zero polynomial");
    std::vector<mpq_class> r(p.coeffs());
    const long dq = q.degree();
    if (p.degree() < dq) {
        quot = RatPolynomial{};
        rem = p;
        return;
    }
    std::vector<mpq_class> qc(static_cast<std::size_t>(p.degree() - dq + 1));
    const mpq_class lc_inv = 1 / q.leading();
    for (long k = p.degree() - dq; k >= 0; --k) {
        mpq_class t = r[static_cast<std::size_t>(k + dq)] * lc_inv;
        qc[static_cast<std::size_t>(k)] = t;
        if (t == 0) continue;
        for (long j = 0; j <= dq; ++j) r[static_cast<std::size_t>(k + j)] -= t * q.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(dq));
    quot = RatPolynomial(std::move(qc));
    rem = RatPolynomial(std::move(r));
}

// ---------------------------------------------------------------- small integers

int moebius(long n) {
    if (n < 1) throw Error("moebius: argument must be positive");
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw Error("divisors: argument must be positive");
    std::vector<long> small, large;
    for (long k = 1; k * k <= n; ++k) {
        if (n % k) continue;
        small.push_back(k);
        if (k != n / k) large.push_back(n / k);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

long gcd_long(long a, long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long ipow(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, b, &r)) throw BudgetExceeded("ipow: overflow");
    }
    return r;
}

} // namespace pcf
