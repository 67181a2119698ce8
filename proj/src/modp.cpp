#include "pcf/modp.hpp"

#include <algorithm>

namespace pcf::modp {

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
    if (a % p == 0) throw DivisionByZero("modp: inverse of zero");
    return pow(a, p - 2);
}

std::uint64_t Field::reduce(const mpz_class& v) const {
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

Poly from_int(const IntPolynomial& f, const Field& F) {
    Poly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = F.reduce(f[i]);
    trim(r);
    return r;
}

IntPolynomial to_int(const Poly& f) {
    std::vector<mpz_class> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = static_cast<unsigned long>(f[i]);
    return IntPolynomial(std::move(c));
}

Poly add(const Poly& a, const Poly& b, const Field& F) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, const Field& F) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, const Field& F) {
    if (a.empty() || b.empty()) return {};
    // Accumulate in 128 bits and reduce once per output coefficient.
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 126;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
            if (acc[i + j] >= cap) acc[i + j] %= F.p;
        }
    }
    Poly r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i] % F.p);
    trim(r);
    return r;
}

Poly scale(const Poly& a, std::uint64_t k, const Field& F) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], k);
    trim(r);
    return r;
}

void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r, const Field& F) {
    if (b.empty()) throw DivisionByZero("modp::divrem: zero divisor");
    r = a;
    if (a.size() < b.size()) {
        q.clear();
        return;
    }
    const std::size_t db = b.size() - 1;
    const std::uint64_t inv = F.inv(b.back());
    q.assign(a.size() - db, 0);
    for (std::size_t k = a.size() - db; k-- > 0;) {
        const std::uint64_t t = F.mul(r[k + db], inv);
        q[k] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] = F.sub(r[k + j], F.mul(t, b[j]));
    }
    r.resize(db);
    trim(r);
    trim(q);
}

Poly rem(const Poly& a, const Poly& b, const Field& F) {
    Poly q, r;
    divrem(a, b, q, r, F);
    return r;
}

Poly make_monic(const Poly& a, const Field& F) {
    if (a.empty()) return a;
    return scale(a, F.inv(a.back()), F);
}

Poly gcd(const Poly& a, const Poly& b, const Field& F) {
    Poly x = a, y = b;
    while (!y.empty()) {
        Poly r = rem(x, y, F);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x, F);
}

Poly derivative(const Poly& a, const Field& F) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
    trim(r);
    return r;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, const Field& F) {
    Poly result{1};
    Poly b = rem(base, m, F);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result, F), m, F);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, F), m, F);
    }
    trim(result);
    return result;
}

std::uint64_t resultant(Poly a, Poly b, const Field& F) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    std::uint64_t res = 1;
    // Euclid over F_p: Res(a,b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r).
    while (true) {
        const long da = degree(a), db = degree(b);
        if (db == 0) return F.mul(res, F.pow(b[0], static_cast<std::uint64_t>(da)));
        Poly r = rem(a, b, F);
        if (r.empty()) return 0;
        const long dr = degree(r);
        if ((da & 1) && (db & 1)) res = F.neg(res);
        res = F.mul(res, F.pow(b.back(), static_cast<std::uint64_t>(da - dr)));
        a = std::move(b);
        b = std::move(r);
    }
}

namespace {

bool poly_less(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

Poly random_poly(std::size_t deg_bound, const Field& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
    Poly r(deg_bound);
    for (auto& v : r) v = dist(rng);
    trim(r);
    return r;
}

// Splits f, a product of distinct monic irreducibles of degree k each.
void equal_degree(const Poly& f, long k, const Field& F, std::mt19937_64& rng, std::vector<Poly>& out) {
    const long n = degree(f);
    if (n <= k) {
        out.push_back(f);
        return;
    }
    mpz_class q = mpz_class(static_cast<unsigned long>(F.p));
    mpz_class qk;
    mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
    while (true) {
        Poly a = random_poly(static_cast<std::size_t>(n), F, rng);
        if (degree(a) < 1) continue;
        Poly g = gcd(a, f, F);
        if (degree(g) > 0 && degree(g) < n) {
            equal_degree(g, k, F, rng, out);
            Poly q2, r2;
            divrem(f, g, q2, r2, F);
            equal_degree(make_monic(q2, F), k, F, rng, out);
            return;
        }
        Poly b;
        if (F.p == 2) {
            // Trace map a + a^2 + ... + a^(2^(k-1)).
            Poly t = a, acc = a;
            for (long i = 1; i < k; ++i) {
                t = rem(mul(t, t, F), f, F);
                acc = add(acc, t, F);
            }
            b = acc;
        } else {
            b = powmod(a, (qk - 1) / 2, f, F);
            b = sub(b, Poly{1}, F);
        }
        g = gcd(b, f, F);
        if (degree(g) > 0 && degree(g) < n) {
            equal_degree(g, k, F, rng, out);
            Poly q2, r2;
            divrem(f, g, q2, r2, F);
            equal_degree(make_monic(q2, F), k, F, rng, out);
            return;
        }
    }
}

template <class Emit>
void distinct_degree(const Poly& f0, const Field& F, Emit emit) {
    Poly f = make_monic(f0, F);
    const Poly x{0, 1};
    Poly h = rem(x, f, F);
    const mpz_class p = mpz_class(static_cast<unsigned long>(F.p));
    long k = 0;
    while (degree(f) >= 2 * (k + 1)) {
        ++k;
        h = powmod(h, p, f, F);
        Poly g = gcd(sub(h, x, F), f, F);
        if (degree(g) > 0) {
            emit(g, k);
            Poly q, r;
            divrem(f, g, q, r, F);
            f = make_monic(q, F);
            h = rem(h, f, F);
        }
    }
    if (degree(f) > 0) emit(f, degree(f));
}

} // namespace

std::vector<Poly> factor_squarefree(const Poly& f, const Field& F, std::mt19937_64& rng) {
    std::vector<Poly> out;
    if (degree(f) < 1) return out;
    distinct_degree(f, F, [&](const Poly& g, long k) { equal_degree(g, k, F, rng, out); });
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<long> factor_degrees(const Poly& f, const Field& F) {
    std::vector<long> out;
    if (degree(f) < 1) return out;
    distinct_degree(f, F, [&](const Poly& g, long k) {
        for (long i = 0; i < degree(g) / k; ++i) out.push_back(k);
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace pcf::modp
