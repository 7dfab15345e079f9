#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "qseries/errors.hpp"
#include "qseries/identities.hpp"
#include "qseries/products.hpp"

using namespace qseries;
using namespace testing;

namespace {

// Euler's pentagonal theorem, written out independently of the product code.
Series pentagonal(Exponent order) {
    std::vector<Integer> c(static_cast<std::size_t>(order + 1));
    for (Exponent k = -order; k <= order; ++k) {
        const Exponent e = k * (3 * k - 1) / 2;
        if (e >= 0 && e <= order) {
            c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
        }
    }
    return Series::from_coefficients(0, std::move(c), order);
}

// Factor-by-factor expansion with no in-place tricks.
Series naive_product(const ProductSpec& spec, Exponent order) {
    Series r = Series::one(order);
    for (const auto& f : spec.factors) {
        for (Exponent e = f.start; e <= order; e += f.step) {
            Series factor = Series::one(order) - Series::monomial(f.sign, e, order);
            r = r * pow(factor, f.power);
        }
    }
    return r;
}

}  // namespace

TEST_SUITE("qproducts") {
    TEST_CASE("pochhammer examples") {
        CHECK(pochhammer(1, 1, 21) == pentagonal(21));
        CHECK(coeffs(pochhammer(1, 1, 21), 0, 15) ==
              ints({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1}));
        const Series cube = pow(pochhammer(1, 1, 15), 3);
        CHECK(coeffs(cube, 0, 15) ==
              ints({1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9, 0, 0, 0, 0, -11}));
        const Series theta = pochhammer(2, 2, 16) * pow(pochhammer(1, 2, 16), 2);
        CHECK(coeffs(theta, 0, 16) ==
              ints({1, -2, 0, 0, 2, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 2}));
    }

    TEST_CASE("pochhammer with a = 0 is zero") {
        CHECK(pochhammer(0, 1, 10).is_zero());
        CHECK(pochhammer(0, 3, 10).order() == 10);
    }

    TEST_CASE("expand matches the naive factor loop") {
        const ProductSpec spec{{{1, 1, 1, 3}, {2, 5, -1, 2}, {3, 4, 1, -2}, {0, 7, -1, 1}}};
        CHECK(expand(spec, 60) == naive_product(spec, 60));
        const ProductSpec inv{{{1, 2, 1, -3}}};
        CHECK(expand(inv, 40) == naive_product(inv, 40));
    }

    TEST_CASE("expand rejects bad factors") {
        CHECK_THROWS_AS(expand(ProductSpec{{{0, 1, 1, -1}}}, 5), DomainError);
        CHECK_THROWS_AS(expand(ProductSpec{{{1, 0, 1, 1}}}, 5), DomainError);
    }

    TEST_CASE("theta6 examples") {
        const Series t = theta6(15);
        CHECK(coeffs(t, 0, 15) ==
              ints({1, -5, 7, 0, 0, -11, 0, 13, 0, 0, 0, 0, -17, 0, 0, 19}));
        CHECK(t.coeff(3) == 0);
        CHECK(t.coeff(4) == 0);
        CHECK(theta6(500) == theta6(500, ThetaMode::sum));
    }

    TEST_CASE("rogers-ramanujan products") {
        const auto rr = rr_products(10);
        CHECK(coeffs(rr.r14 * rr.f5, 0, 5) == ints({1, -5, 4, 14, -15, -20}));
        // The reciprocals, labelled by the product they invert.
        CHECK(coeffs(invert(rr.r14 * rr.f5), 0, 5) == ints({1, 5, 21, 71, 216, 597}));
        CHECK(coeffs(invert(rr.r23 * rr.f5), 0, 5) == ints({1, 6, 26, 91, 282, 793}));
        CHECK(sept_target(SeptVariant::v14, 10) == invert(rr.r14 * rr.f5));
    }

    TEST_CASE("rogers-ramanujan sums") {
        // 1/((q;q^5)(q^4;q^5)) = sum q^(n^2)/(q;q)_n
        constexpr Exponent n = 40;
        Series sum = Series::zero(n);
        Series denom = Series::one(n);
        for (Exponent k = 0; k * k <= n; ++k) {
            if (k > 0) {
                denom = denom * (Series::one(n) - Series::monomial(1, k, n));
            }
            sum += shift(invert(denom), k * k).truncate(n);
        }
        CHECK(sum == rr_products(n).r14);
    }

    TEST_CASE("quintuple") {
        CHECK(verify_quintuple(80).outcome == Outcome::exact_to_order);
        CHECK(verify_quintuple(1).outcome == Outcome::exact_to_order);
        const auto sides = quintuple_sides(40);
        CHECK(sides.sum.zcoeff(0).coeff(0) == 1);
        // z-support of the sum side: exactly {3n, -3n-1 : (3n^2+n)/2 <= N}
        std::set<Exponent> want;
        for (Exponent n = -10; n <= 10; ++n) {
            if ((3 * n * n + n) / 2 <= 40) {
                want.insert(3 * n);
                want.insert(-3 * n - 1);
            }
        }
        std::set<Exponent> got;
        for (const auto& [z, s] : sides.sum.terms()) {
            got.insert(z);
        }
        CHECK(got == want);
    }

    TEST_CASE("septuple") {
        CHECK(verify_septuple(80).outcome == Outcome::exact_to_order);
        CHECK(verify_septuple(2).outcome == Outcome::exact_to_order);
        const auto sides = septuple_sides(20);
        CHECK(sides.sum.zcoeff(0).coeff(0) == 1);
    }

    TEST_CASE("jacobi triple product") {
        CHECK(verify_jtp(80, JtpForm::odd).outcome == Outcome::exact_to_order);
        CHECK(verify_jtp(80, JtpForm::even).outcome == Outcome::exact_to_order);
        const Series z0 = jtp_sides(30, JtpForm::even).sum.zcoeff(0);
        CHECK(z0 == Series::one(30));
    }

    TEST_CASE("bivariate identities hold for every N up to 120") {
        for (Exponent n = 1; n <= 120; ++n) {
            CHECK(verify_quintuple(n).passed());
            CHECK(verify_septuple(n).passed());
            CHECK(verify_jtp(n, JtpForm::odd).passed());
            CHECK(verify_jtp(n, JtpForm::even).passed());
        }
    }

    TEST_CASE("thm16 lhs") {
        CHECK(thm16_lhs(1, 3, 0, 10).coeff(0) == 1);
        CHECK(thm16_lhs(1, 3, 0, 40) == thm16_rhs(1, 3, 0, 40));
        CHECK(thm16_lhs(2, 5, 1, 40) == thm16_rhs(2, 5, 1, 40));
        CHECK_THROWS_AS(thm16_lhs(1, 2, 0, 10), DomainError);
        CHECK_THROWS_AS(thm16_lhs(3, 3, 0, 10), DomainError);
        CHECK_THROWS_AS(thm16_lhs(0, 3, 0, 10), DomainError);
        CHECK_THROWS_AS(thm16_lhs(1, 3, -1, 10), DomainError);
    }
}
