#include "pcf/zfactor.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace pcf {

namespace {

using Coeffs = std::vector<mpz_class>;

// ------------------------------------------------ Z/m[x] helpers (mpz)

Coeffs mod_coeffs(const IntPolynomial& f, const mpz_class& m) {
    Coeffs c(f.coeffs());
    for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return c;
}

IntPolynomial reduce_mod(const IntPolynomial& f, const mpz_class& m) { return IntPolynomial(mod_coeffs(f, m)); }

IntPolynomial symmetric_mod(const IntPolynomial& f, const mpz_class& m) {
    Coeffs c = mod_coeffs(f, m);
    const mpz_class half = m / 2;
    for (auto& v : c)
        if (v > half) v -= m;
    return IntPolynomial(std::move(c));
}

IntPolynomial mulmod(const IntPolynomial& a, const IntPolynomial& b, const mpz_class& m) {
    return reduce_mod(zx_mul(a, b), m);
}

// Division by a monic polynomial modulo m.
void divrem_monic_mod(const IntPolynomial& a, const IntPolynomial& b, const mpz_class& m, IntPolynomial& q,
                      IntPolynomial& r) {
    const long db = b.degree();
    if (a.degree() < db) {
        q = {};
        r = reduce_mod(a, m);
        return;
    }
    Coeffs rc = mod_coeffs(a, m);
    Coeffs qc(static_cast<std::size_t>(a.degree() - db + 1));
    for (long k = a.degree() - db; k >= 0; --k) {
        mpz_class t = rc[static_cast<std::size_t>(k + db)];
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        qc[static_cast<std::size_t>(k)] = t;
        if (t == 0) continue;
        for (long j = 0; j <= db; ++j)
            mpz_submul(rc[static_cast<std::size_t>(k + j)].get_mpz_t(), t.get_mpz_t(),
                       b[static_cast<std::size_t>(j)].get_mpz_t());
    }
    rc.resize(static_cast<std::size_t>(db));
    q = reduce_mod(IntPolynomial(std::move(qc)), m);
    r = reduce_mod(IntPolynomial(std::move(rc)), m);
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw LiftInconsistency("hensel_lift: leading coefficient not invertible");
    return r;
}

// s*a + t*b = 1 over F_p.
void ext_gcd_modp(const modp::Poly& a, const modp::Poly& b, const modp::Field& F, modp::Poly& s, modp::Poly& t) {
    modp::Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        modp::Poly q, r;
        modp::divrem(r0, r1, q, r, F);
        modp::Poly s2 = modp::sub(s0, modp::mul(q, s1, F), F);
        modp::Poly t2 = modp::sub(t0, modp::mul(q, t1, F), F);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (modp::degree(r0) != 0) throw LiftInconsistency("hensel_lift: factors are not coprime modulo p");
    const std::uint64_t inv = F.inv(r0[0]);
    s = modp::scale(s0, inv, F);
    t = modp::scale(t0, inv, F);
}

// One quadratic Hensel step: f == g*h (mod m), s*g + t*h == 1 (mod m), h monic.
// Produces the same relations modulo m2 (m2 <= m^2).
void hensel_step(const IntPolynomial& f, IntPolynomial& g, IntPolynomial& h, IntPolynomial& s, IntPolynomial& t,
                 const mpz_class& m2) {
    IntPolynomial e = reduce_mod(f - zx_mul(g, h), m2);
    IntPolynomial q, r;
    divrem_monic_mod(zx_mul(s, e), h, m2, q, r);
    IntPolynomial g2 = reduce_mod(g + zx_mul(t, e) + zx_mul(q, g), m2);
    IntPolynomial h2 = reduce_mod(h + r, m2);
    IntPolynomial b = reduce_mod(zx_mul(s, g2) + zx_mul(t, h2) - IntPolynomial::constant(1), m2);
    IntPolynomial c, d;
    divrem_monic_mod(zx_mul(s, b), h2, m2, c, d);
    s = reduce_mod(s - d, m2);
    t = reduce_mod(t - zx_mul(t, b) - zx_mul(c, g2), m2);
    g = std::move(g2);
    h = std::move(h2);
}

std::vector<std::uint64_t> small_primes_from(std::uint64_t start, std::size_t count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = start; out.size() < count; ++p)
        if (is_prime(static_cast<long>(p))) out.push_back(p);
    return out;
}

// Usable prime for p: does not divide lc and keeps p squarefree.
bool good_prime(const IntPolynomial& p, std::uint64_t prime) {
    modp::Field F{prime};
    if (F.reduce(p.leading()) == 0) return false;
    modp::Poly f = modp::from_int(p, F);
    modp::Poly g = modp::gcd(f, modp::derivative(f, F), F);
    return modp::degree(g) == 0;
}

bool poly_less(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

// Number of good primes examined before choosing the one with the fewest
// modular factors.
constexpr std::size_t kPrimeCandidates = 5;

// Factors a primitive squarefree polynomial of degree >= 2.
std::vector<IntPolynomial> factor_squarefree_z(const IntPolynomial& f, std::uint64_t seed) {
    std::uint64_t best_prime = 0;
    std::size_t best_count = 0, examined = 0;
    for (std::uint64_t prime = 3; examined < kPrimeCandidates; ++prime) {
        if (!is_prime(static_cast<long>(prime)) || !good_prime(f, prime)) continue;
        ++examined;
        modp::Field F{prime};
        const auto degs = modp::factor_degrees(modp::make_monic(modp::from_int(f, F), F), F);
        if (degs.size() == 1) return {f};
        if (best_prime == 0 || degs.size() < best_count) {
            best_prime = prime;
            best_count = degs.size();
        }
    }

    const std::vector<IntPolynomial> modular = factor_mod_p(f, best_prime, seed);
    // Lift until p^k > 2 * |lc| * B.
    const mpz_class bound = 2 * abs(f.leading()) * mignotte_bound(f) + 1;
    unsigned k = 1;
    mpz_class pk = static_cast<unsigned long>(best_prime);
    while (pk <= bound) {
        pk *= static_cast<unsigned long>(best_prime);
        ++k;
    }
    std::vector<IntPolynomial> lifted = hensel_lift(f, modular, best_prime, k);

    // Zassenhaus recombination over subsets of increasing size.
    std::vector<IntPolynomial> found;
    IntPolynomial rest = f;
    std::vector<std::size_t> alive(lifted.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    std::size_t s = 1;
    while (2 * s <= alive.size()) {
        bool split = false;
        const mpz_class b = rest.leading();
        const mpz_class b_const = b * rest.coeff(0);
        std::vector<std::size_t> pick(s);
        for (std::size_t i = 0; i < s; ++i) pick[i] = i;
        while (true) {
            // Constant-term filter before the full product.
            mpz_class ct = b;
            for (std::size_t i : pick) {
                ct *= lifted[alive[i]].coeff(0);
                mpz_fdiv_r(ct.get_mpz_t(), ct.get_mpz_t(), pk.get_mpz_t());
            }
            if (ct > pk / 2) ct -= pk;
            const bool plausible =
                ct != 0 ? (b_const == 0 || mpz_divisible_p(b_const.get_mpz_t(), ct.get_mpz_t())) : b_const == 0;
            if (plausible) {
                IntPolynomial cand = IntPolynomial::constant(b);
                for (std::size_t i : pick) cand = mulmod(cand, lifted[alive[i]], pk);
                cand = zx_primitive_part(symmetric_mod(cand, pk));
                if (cand.degree() > 0) {
                    try {
                        IntPolynomial quot = zx_exact_div(rest, cand);
                        found.push_back(cand);
                        rest = zx_primitive_part(quot);
                        std::vector<std::size_t> keep;
                        for (std::size_t i = 0; i < alive.size(); ++i)
                            if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(alive[i]);
                        alive = std::move(keep);
                        split = true;
                    } catch (const NotDivisible&) {
                    }
                }
            }
            if (split) break;
            // Next combination in lexicographic order.
            std::size_t i = s;
            while (i > 0 && pick[i - 1] == alive.size() - s + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!split) ++s;
    }
    if (rest.degree() > 0) found.push_back(rest);
    return found;
}

} // namespace

IntPolynomial FactoredPoly::expand() const {
    IntPolynomial acc = IntPolynomial::constant(unit);
    for (const auto& [f, e] : factors) acc = acc * zx_pow(f, e);
    return acc;
}

mpz_class mignotte_bound(const IntPolynomial& p) {
    mpz_class s = 0;
    for (const auto& v : p.coeffs()) s += v * v;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (r * r < s) ++r;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(std::max<long>(p.degree(), 0)));
    return r;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw Error("squarefree_part: zero polynomial");
    if (p.degree() == 0) return IntPolynomial::constant(1);
    IntPolynomial g = zx_gcd(p, p.derivative());
    return zx_primitive_part(zx_exact_div(zx_primitive_part(p), g));
}

std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& p) {
    std::vector<std::pair<IntPolynomial, unsigned>> out;
    IntPolynomial f = zx_primitive_part(p);
    if (f.degree() < 1) return out;
    IntPolynomial g = zx_gcd(f, f.derivative());
    IntPolynomial w = zx_exact_div(f, g);
    unsigned i = 1;
    while (w.degree() > 0) {
        IntPolynomial y = zx_gcd(w, g);
        IntPolynomial z = zx_primitive_part(zx_exact_div(w, y));
        if (z.degree() > 0) out.emplace_back(z, i);
        ++i;
        w = y;
        g = zx_primitive_part(zx_exact_div(g, y));
    }
    return out;
}

std::vector<IntPolynomial> factor_mod_p(const IntPolynomial& p, std::uint64_t prime, std::uint64_t seed) {
    if (!is_prime(static_cast<long>(prime))) throw Error("factor_mod_p: modulus " + std::to_string(prime) + " is not prime");
    modp::Field F{prime};
    if (F.reduce(p.leading()) == 0)
        throw Error("factor_mod_p: prime " + std::to_string(prime) + " divides the leading coefficient");
    modp::Poly f = modp::make_monic(modp::from_int(p, F), F);
    if (modp::degree(modp::gcd(f, modp::derivative(f, F), F)) > 0)
        throw NotSquarefreeModP("factor_mod_p: polynomial is not squarefree modulo " + std::to_string(prime));
    std::mt19937_64 rng(seed);
    std::vector<IntPolynomial> out;
    for (const auto& g : modp::factor_squarefree(f, F, rng)) out.push_back(modp::to_int(g));
    return out;
}

std::vector<IntPolynomial> hensel_lift(const IntPolynomial& p, const std::vector<IntPolynomial>& factors,
                                       std::uint64_t prime, unsigned k) {
    if (factors.empty()) throw LiftInconsistency("hensel_lift: no factors");
    const mpz_class pz = static_cast<unsigned long>(prime);
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(), k);
    modp::Field F{prime};
    {
        // The modular factorization must match p up to its leading coefficient.
        modp::Poly prod{F.reduce(p.leading())};
        for (const auto& f : factors) prod = modp::mul(prod, modp::from_int(f, F), F);
        if (prod != modp::from_int(p, F))
            throw LiftInconsistency("hensel_lift: factors do not multiply to the input modulo p");
    }
    if (factors.size() == 1) {
        const mpz_class inv = inverse_mod(p.leading(), pk);
        return {reduce_mod(p * inv, pk)};
    }

    std::vector<IntPolynomial> out;
    IntPolynomial target = reduce_mod(p, pk);
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        // target == g * h (mod p) with h = factors[i] monic.
        modp::Poly gp{F.reduce(target.leading())};
        for (std::size_t j = i + 1; j < factors.size(); ++j) gp = modp::mul(gp, modp::from_int(factors[j], F), F);
        modp::Poly hp = modp::from_int(factors[i], F);
        modp::Poly sp, tp;
        ext_gcd_modp(gp, hp, F, sp, tp);
        IntPolynomial g = modp::to_int(gp), h = modp::to_int(hp), s = modp::to_int(sp), t = modp::to_int(tp);
        unsigned e = 1;
        while (e < k) {
            const unsigned e2 = std::min(2 * e, k);
            mpz_class m2;
            mpz_pow_ui(m2.get_mpz_t(), pz.get_mpz_t(), e2);
            hensel_step(reduce_mod(target, m2), g, h, s, t, m2);
            e = e2;
        }
        out.push_back(reduce_mod(h, pk));
        target = reduce_mod(g, pk);
    }
    out.push_back(reduce_mod(target * inverse_mod(target.leading(), pk), pk));

    IntPolynomial check = IntPolynomial::constant(p.leading());
    for (const auto& f : out) check = mulmod(check, f, pk);
    if (check != reduce_mod(p, pk)) throw LiftInconsistency("hensel_lift: lifted product does not match input");
    return out;
}

FactoredPoly factor_z(const IntPolynomial& p, std::uint64_t seed) {
    if (p.is_zero()) throw Error("factor_z: zero polynomial");
    FactoredPoly out;
    out.unit = zx_content(p);
    if (p.leading() < 0) out.unit = -out.unit;
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        std::vector<IntPolynomial> pieces;
        if (part.degree() == 1)
            pieces.push_back(part);
        else
            pieces = factor_squarefree_z(part, seed);
        for (auto& f : pieces) out.factors.emplace_back(zx_primitive_part(f), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return poly_less(a.first, b.first);
        return a.second < b.second;
    });
    if (out.expand() != p) throw Error("factor_z: factorization does not reassemble to the input");
    return out;
}

bool is_irreducible_z(const IntPolynomial& p, std::uint64_t seed) {
    if (p.degree() < 1) throw Error("is_irreducible_z: degree must be at least 1");
    if (p.degree() == 1) return true;
    std::size_t usable = 0;
    for (std::uint64_t prime : small_primes_from(2, 200)) {
        if (usable == 25) break;
        if (!good_prime(p, prime)) continue;
        ++usable;
        modp::Field F{prime};
        if (modp::factor_degrees(modp::make_monic(modp::from_int(p, F), F), F).size() == 1) return true;
    }
    const FactoredPoly f = factor_z(p, seed);
    return f.factors.size() == 1 && f.factors.front().second == 1;
}

} // namespace pcf
