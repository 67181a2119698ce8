#include "pcf/dynatomic.hpp"

#include <string>

namespace pcf {

namespace {

std::string triple(long d, long a, long b) {
    return "(" + std::to_string(d) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

IntPolynomial OrbitSequence::at(std::size_t i) const {
    if (i == 0) return {};
    if (i > polys.size()) throw BudgetExceeded("orbit index " + std::to_string(i) + " not computed");
    return polys[i - 1];
}

OrbitSequence orbit_polys(long d, std::size_t upto, std::size_t degree_budget) {
    if (d < 2) throw Error("orbit_polys: degree d must be at least 2");
    if (upto < 1) throw Error("orbit_polys: need at least one orbit element");
    // deg a_upto = d^(upto-1); check the budget before doing any work.
    std::size_t deg = 1;
    for (std::size_t i = 1; i < upto; ++i) {
        if (deg > degree_budget / static_cast<std::size_t>(d))
            throw BudgetExceeded("orbit_polys: a_" + std::to_string(upto) + " for d=" + std::to_string(d) +
                                 " exceeds the degree budget of " + std::to_string(degree_budget));
        deg *= static_cast<std::size_t>(d);
    }
    OrbitSequence out;
    out.d = d;
    out.polys.reserve(upto);
    const IntPolynomial c = IntPolynomial::x();
    out.polys.push_back(c);
    for (std::size_t i = 1; i < upto; ++i)
        out.polys.push_back(zx_pow(out.polys.back(), static_cast<unsigned long>(d)) + c);
    return out;
}

IntPolynomial dyn_product_at_orbit(const OrbitSequence& orbit, long j, long n) {
    if (j < 0 || n < 1) throw Error("dyn_product_at_orbit: need j >= 0 and n >= 1");
    IntPolynomial num = IntPolynomial::constant(1), den = IntPolynomial::constant(1);
    const IntPolynomial aj = orbit.at(static_cast<std::size_t>(j));
    for (long k : divisors(n)) {
        const int mu = moebius(n / k);
        if (mu == 0) continue;
        IntPolynomial diff = orbit.at(static_cast<std::size_t>(j + k)) - aj;
        if (mu > 0)
            num = num * diff;
        else
            den = den * diff;
    }
    try {
        return zx_exact_div(num, den);
    } catch (const NotDivisible& e) {
        throw NotDivisible("dynatomic product at orbit " + triple(orbit.d, j, n) + " is not a polynomial: " +
                           e.what());
    }
}

IntPolynomial dyn_product_at_orbit(long d, long j, long n, std::size_t degree_budget) {
    const OrbitSequence orbit = orbit_polys(d, static_cast<std::size_t>(j + n), degree_budget);
    return dyn_product_at_orbit(orbit, j, n);
}

MisiurewiczPoly gdmn(long d, long m, long n, std::size_t degree_budget) {
    if (m < 0 || n < 1) throw Error("gdmn: need m >= 0 and n >= 1");
    MisiurewiczPoly out{d, m, n, {}, false};
    const OrbitSequence orbit = orbit_polys(d, static_cast<std::size_t>(m + n), degree_budget);
    const std::string where = "G_d(m,n) for (d,m,n)=" + triple(d, m, n);
    if (m == 0) {
        out.G = dyn_product_at_orbit(orbit, 0, n);
    } else {
        IntPolynomial q;
        try {
            q = zx_exact_div(dyn_product_at_orbit(orbit, m, n), dyn_product_at_orbit(orbit, m - 1, n));
            if ((m - 1) % n == 0)
                q = zx_exact_div(q, zx_pow(dyn_product_at_orbit(orbit, 0, n), static_cast<unsigned long>(d - 1)));
        } catch (const NotDivisible& e) {
            throw NotDivisible(where + ": " + e.what());
        }
        out.G = std::move(q);
    }
    if (!out.G.is_monic()) throw NotMonic(where + " is not monic: " + out.G.to_string());
    out.degenerate = out.G.degree() == 0;
    return out;
}

ExponentA exponent_formula(long d, long m, long n) {
    if (m < 1 || n < 1 || d < 2) throw Error("exponent_formula: need d >= 2, m >= 1, n >= 1");
    const long dm1 = ipow(d, m - 1);
    const long a = ((m - 1) % n == 0) ? (dm1 - 1) * (d - 1) : dm1 * (d - 1);
    return ExponentA{static_cast<unsigned long>(a)};
}

long expected_degree(long d, long m, long n) {
    if (m < 1) return -1;
    if (n == 1) return (ipow(d, m - 1) - 1) * (d - 1);
    if (d == 2 && n == 2) return ((m - 1) % 2 == 0) ? ipow(2, m - 1) - 1 : ipow(2, m - 1);
    return -1;
}

} // namespace pcf
