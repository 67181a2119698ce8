#include <doctest.h>

#include "pcf/errors.hpp"
#include "support.hpp"

using namespace pcf;

TEST_SUITE("dynatomic") {

TEST_CASE("orbit polynomials") {
    const auto o = orbit_polys(2, 3);
    REQUIRE(o.size() == 3);
    CHECK(o.at(0).is_zero());
    CHECK(o.at(1) == IntPolynomial{0, 1});
    CHECK(o.at(2) == IntPolynomial{0, 1, 1});
    CHECK(o.at(3) == IntPolynomial{0, 1, 1, 2, 1});
    const auto o3 = orbit_polys(3, 2);
    CHECK(o3.at(2) == IntPolynomial{0, 1, 0, 1});
    CHECK(orbit_polys(2, 1).size() == 1);
    CHECK_THROWS_AS(orbit_polys(2, 40, 1000), BudgetExceeded);
}

TEST_CASE("orbit polynomials evaluate like the integer iteration") {
    const auto o = orbit_polys(3, 5);
    for (long c0 = -4; c0 <= 4; ++c0)
        for (long i = 0; i <= 5; ++i) CHECK(o.at(static_cast<std::size_t>(i)).eval(c0) == oracle::orbit_at(3, i, c0));
}

TEST_CASE("dynatomic products at the critical orbit") {
    CHECK(dyn_product_at_orbit(2, 0, 2) == IntPolynomial{1, 1});
    CHECK(dyn_product_at_orbit(2, 0, 1) == IntPolynomial{0, 1});
    const IntPolynomial g{3, 0, 3, 0, 1};
    CHECK(dyn_product_at_orbit(3, 2, 1) == g * IntPolynomial::monomial(1, 5));
}

TEST_CASE("golden constructions") {
    CHECK(gdmn(2, 2, 1).G == IntPolynomial{2, 1});
    CHECK(gdmn(2, 0, 2).G == IntPolynomial{1, 1});
    CHECK(gdmn(3, 2, 1).G == IntPolynomial{3, 0, 3, 0, 1});
    const auto deg = gdmn(2, 1, 1);
    CHECK(deg.G == IntPolynomial{1});
    CHECK(deg.degenerate);
    CHECK_FALSE(gdmn(2, 2, 1).degenerate);
    CHECK_THROWS_AS(gdmn(1, 2, 1), Error);
    CHECK_THROWS_AS(gdmn(2, 2, 0), Error);
}

TEST_CASE("constructions match the gcd-stripping oracle") {
    for (long d : {2, 3})
        for (long m = 0; m <= 4; ++m)
            for (long n = 1; n <= 3; ++n) {
                if (ipow(d, m + n) > 300) continue;
                CAPTURE(d);
                CAPTURE(m);
                CAPTURE(n);
                const auto G = gdmn(d, m, n);
                CHECK(G.G == oracle::brute_force_gdmn(d, m, n));
                CHECK(G.G.is_monic());
            }
}

TEST_CASE("exponent formula") {
    CHECK(exponent_formula(2, 2, 1).value == 1);
    CHECK(exponent_formula(3, 2, 1).value == 4);
    CHECK(exponent_formula(2, 2, 2).value == 2);
    CHECK(exponent_formula(2, 3, 1).value == 3);
}

TEST_CASE("degree formulas") {
    for (auto [d, m] : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}}) {
        const long want = (ipow(d, m - 1) - 1) * (d - 1);
        CHECK(expected_degree(d, m, 1) == want);
        CHECK(gdmn(d, m, 1).G.degree() == want);
    }
    for (long m = 2; m <= 6; ++m) CHECK(gdmn(2, m, 2).G.degree() == expected_degree(2, m, 2));
}

}
