#include <doctest.h>

#include <algorithm>

#include "pcf/errors.hpp"
#include "pcf/zfactor.hpp"
#include "support.hpp"

using namespace pcf;

namespace {

// Monic irreducible quadratics over F_5 by exhaustive search.
std::vector<IntPolynomial> irreducible_quadratics_mod5() {
    std::vector<IntPolynomial> out;
    for (long b = 0; b < 5; ++b)
        for (long a = 0; a < 5; ++a) {
            bool root = false;
            for (long x = 0; x < 5; ++x) root = root || (x * x + b * x + a) % 5 == 0;
            if (!root) out.push_back(IntPolynomial{a, b, 1});
        }
    return out;
}

IntPolynomial mod_poly(const IntPolynomial& p, long q) {
    std::vector<mpz_class> c(p.coeffs());
    for (auto& v : c) mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(q));
    return IntPolynomial(std::move(c));
}

} // namespace

TEST_SUITE("zfactor") {

TEST_CASE("squarefree part") {
    const IntPolynomial p = IntPolynomial{-1, 1} * IntPolynomial{-1, 1} * IntPolynomial{1, 1};
    CHECK(squarefree_part(p) == IntPolynomial{-1, 0, 1});
    CHECK(squarefree_part(IntPolynomial{3, 0, 3, 0, 1}) == IntPolynomial{3, 0, 3, 0, 1});
    CHECK(squarefree_part(IntPolynomial{5}) == IntPolynomial{1});
    const auto dec = squarefree_decomposition(p);
    CHECK(dec.size() == 2);
}

TEST_CASE("factoring modulo a prime") {
    CHECK(factor_mod_p(IntPolynomial{1, 0, 1}, 5) == std::vector<IntPolynomial>{IntPolynomial{2, 1}, IntPolynomial{3, 1}});
    CHECK(factor_mod_p(IntPolynomial{1, 0, 1}, 3) == std::vector<IntPolynomial>{IntPolynomial{1, 0, 1}});

    // x^4 + 3x^2 + 3 mod 5, against a brute-force search over quadratics.
    const IntPolynomial g{3, 0, 3, 0, 1};
    const auto fac = factor_mod_p(g, 5);
    std::vector<IntPolynomial> quad_divisors;
    for (const auto& q : irreducible_quadratics_mod5()) {
        const IntPolynomial r = mod_poly(zx_prem(g, q), 5);
        if (r.is_zero()) quad_divisors.push_back(q);
    }
    if (quad_divisors.empty()) {
        CHECK(fac.size() == 1);
    } else {
        std::sort(quad_divisors.begin(), quad_divisors.end(),
                  [](const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs() < b.coeffs(); });
        CHECK(fac.size() == 2);
        for (const auto& f : fac) CHECK(std::find(quad_divisors.begin(), quad_divisors.end(), f) != quad_divisors.end());
    }
    CHECK_THROWS_AS(factor_mod_p(IntPolynomial{1, 2, 1}, 5), NotSquarefreeModP);
}

TEST_CASE("Hensel lifting") {
    const auto l1 = hensel_lift(IntPolynomial{-1, 0, 1}, {IntPolynomial{-1, 1}, IntPolynomial{1, 1}}, 3, 2);
    REQUIRE(l1.size() == 2);
    CHECK(std::find(l1.begin(), l1.end(), IntPolynomial{8, 1}) != l1.end());
    CHECK(std::find(l1.begin(), l1.end(), IntPolynomial{1, 1}) != l1.end());
    const auto l2 = hensel_lift(IntPolynomial{1, 0, 1}, {IntPolynomial{2, 1}, IntPolynomial{3, 1}}, 5, 2);
    REQUIRE(l2.size() == 2);
    CHECK(std::find(l2.begin(), l2.end(), IntPolynomial{7, 1}) != l2.end());
    CHECK(std::find(l2.begin(), l2.end(), IntPolynomial{18, 1}) != l2.end());
    const auto l3 = hensel_lift(IntPolynomial{2, 0, 1}, {IntPolynomial{2, 0, 1}}, 5, 3);
    CHECK(l3 == std::vector<IntPolynomial>{IntPolynomial{2, 0, 1}});
}

TEST_CASE("factoring over the integers") {
    const auto f = factor_z(IntPolynomial{-1, 0, 1});
    REQUIRE(f.count() == 2);
    CHECK(f.factors[0].first == IntPolynomial{-1, 1});
    CHECK(f.factors[1].first == IntPolynomial{1, 1});
    CHECK(factor_z(IntPolynomial{3, 0, 3, 0, 1}).count() == 1);

    const IntPolynomial G = gdmn(4, 2, 1).G;
    CHECK(G.degree() == 9);
    const auto fg = factor_z(G);
    CHECK(fg.count() == 2);
    CHECK(fg.expand() == G);

    // Multiplicities and content.
    const IntPolynomial p = IntPolynomial{6} * IntPolynomial{1, 1} * IntPolynomial{1, 1} * IntPolynomial{2, 0, 1};
    const auto fp = factor_z(p);
    CHECK(fp.unit == 6);
    CHECK(fp.expand() == p);
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible_z(IntPolynomial{2, 1}));
    CHECK_FALSE(is_irreducible_z(IntPolynomial{-1, 0, 1}));
    const IntPolynomial G = gdmn(2, 4, 1).G;
    CHECK(G.degree() == 7);
    CHECK(is_irreducible_z(G));
    // Swinnerton-Dyer style: x^4 - 10x^2 + 1 is irreducible but splits mod every prime.
    CHECK(is_irreducible_z(IntPolynomial{1, 0, -10, 0, 1}));
    CHECK(factor_z(IntPolynomial{1, 0, -10, 0, 1}).count() == 1);
}

TEST_CASE("property: factorization reassembly") {
    std::mt19937_64 rng(19);
    for (int t = 0, done = 0; done < 1000; ++t) {
        IntPolynomial p{1};
        std::uniform_int_distribution<int> parts(1, 3), deg(1, 4);
        const int k = parts(rng);
        for (int i = 0; i < k; ++i) p = p * oracle::random_poly(rng, deg(rng), 12);
        if (p.degree() < 1) continue;
        const auto f = factor_z(p, static_cast<std::uint64_t>(t));
        REQUIRE(f.expand() == p);
        for (const auto& [q, mult] : f.factors) {
            REQUIRE(q.degree() >= 1);
            REQUIRE(q.leading() > 0);
            REQUIRE(zx_content(q) == 1);
            if (q.degree() <= 6) REQUIRE(is_irreducible_z(q));
        }
        ++done;
    }
}

TEST_CASE("factorization does not depend on the seed") {
    const IntPolynomial G = gdmn(4, 2, 2).G;
    const auto a = factor_z(G, 0), b = factor_z(G, 12345);
    CHECK(a.factors == b.factors);
}

}
