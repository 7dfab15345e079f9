#include <doctest.h>

#include "helpers.hpp"
#include "qseries/errors.hpp"
#include "qseries/macmahon.hpp"
#include "qseries/oracle.hpp"
#include "qseries/products.hpp"
#include "qseries/zseries.hpp"

using namespace qseries;
using namespace testing;

namespace {

constexpr std::uint64_t kSeed = 0x5eed'9e37'79b9'7f4aULL;
constexpr int kRingCases = 500;
constexpr int kInverseCases = 100;
constexpr Exponent kRingOrder = 64;

// Reference double loop with no GMP tricks.
std::vector<Integer> naive(const Series& f, const Series& g, Exponent order) {
    std::vector<Integer> r(static_cast<std::size_t>(order + 1));
    for (Exponent i = f.valuation(); i <= f.order(); ++i) {
        for (Exponent j = g.valuation(); j <= g.order(); ++j) {
            if (i + j >= 0 && i + j <= order) {
                r[static_cast<std::size_t>(i + j)] += f.coeff(i) * g.coeff(j);
            }
        }
    }
    return r;
}

}  // namespace

TEST_SUITE("series") {
    TEST_CASE("add examples") {
        CHECK(poly({1, -1}, 5) + poly({0, 1}, 5) == Series::one(5));
        const Series f = poly({3, 0, -2, 7}, 6, -1);
        CHECK(f + Series::zero(6) == f);
        const Series s = Series::monomial(1, -2, 3) + Series::monomial(1, 3, 3);
        CHECK(s.valuation() == -2);
        CHECK(s.order() == 3);
        CHECK(coeffs(s, -2, 3) == ints({1, 0, 0, 0, 0, 1}));
    }

    TEST_CASE("add takes the smaller order") {
        const Series s = poly({1, 1, 1, 1}, 3) + poly({1}, 1);
        CHECK(s.order() == 1);
        CHECK(coeffs(s, 0, 1) == ints({2, 1}));
    }

    TEST_CASE("mul examples") {
        constexpr Exponent n = 30;
        std::vector<Integer> ones(n + 1, Integer(1));
        const Series geometric = Series::from_coefficients(0, ones, n);
        CHECK(poly({1, -1}, n) * geometric == Series::one(n));

        const Series e3 = pow(pochhammer(1, 1, 50), 3);
        CHECK(e3 * invert(e3) == Series::one(50));

        CHECK(Series::monomial(1, -1, 10) * Series::monomial(1, 1, 10) == Series::one(9));
    }

    TEST_CASE("mul keeps only determined coefficients") {
        const Series f = poly({1, 2, 3}, 10, 2);  // order 10, valuation 2
        const Series g = poly({1, 1}, 5, -1);     // order 5, valuation -1
        const Series h = f * g;
        CHECK(h.valuation() == 1);
        CHECK(h.order() == std::min<Exponent>(10 - 1, 5 + 2));
    }

    TEST_CASE("invert examples") {
        CHECK(invert(poly({1, -1}, 12)) ==
              Series::from_coefficients(0, std::vector<Integer>(13, Integer(1)), 12));
        const Series p3 = invert(pow(pochhammer(1, 1, 12), 3));
        for (Exponent n = 0; n <= 12; ++n) {
            CHECK(p3.coeff(n) == oracle::p3_oracle(n));
        }
        CHECK(coeffs(p3, 0, 3) == ints({1, 3, 9, 22}));
        CHECK(coeffs(invert(theta6(6)), 0, 6) == ints({1, 5, 18, 55, 149, 371, 867}));
    }

    TEST_CASE("invert valuation and order") {
        const Series f = poly({-1, 4, 2}, 8, 3);
        const Series g = invert(f);
        CHECK(g.valuation() == -3);
        CHECK(g.order() == 8 - 6);
        const Series fg = f * g;
        CHECK(fg == Series::one(fg.order()));
    }

    TEST_CASE("invert errors") {
        CHECK_THROWS_AS(invert(Series::zero(5)), NotInvertibleError);
        CHECK_THROWS_AS(invert(poly({2, 1}, 5)), NotInvertibleError);
        CHECK_THROWS_AS(invert(poly({2, 1}, 5)), DomainError);
    }

    TEST_CASE("shift examples") {
        const Series s = shift(Series::one(0), -5);
        CHECK(s.valuation() == -5);
        CHECK(s.order() == -5);
        CHECK(s.coeff(-5) == 1);
        const Series f = poly({1, -3, 0, 5}, 9, 2);
        CHECK(shift(shift(f, 7), -7) == f);
        const Series a1 = family_series(FamilySpec::a(), 1, 10);
        CHECK(shift(a1, -1).coeff(0) == 1);
    }

    TEST_CASE("coeff examples") {
        CHECK(invert(theta6(6)).coeff(6) == 867);
        CHECK(Series::zero(5).coeff(3) == 0);
        CHECK(pow(pochhammer(1, 1, 10), 3).coeff(10) == 9);
        CHECK(poly({1, 2}, 4, 2).coeff(-7) == 0);
    }

    TEST_CASE("coeff beyond the order is an error") {
        CHECK_THROWS_AS(poly({1}, 4).coeff(5), OutOfRangeError);
        CHECK_THROWS_AS(Series::zero(4).coeff(5), OutOfRangeError);
    }

    TEST_CASE("first_mismatch examples") {
        const Series f = pow(pochhammer(1, 1, 100), 2);
        CHECK_FALSE(first_mismatch(f, f, 100).has_value());
        CHECK(first_mismatch(Series::one(10), poly({1, 0, 0, 0, 0, 0, 0, 1}, 10), 10) == 7);
        CHECK_FALSE(
            first_mismatch(theta6(500), theta6(500, ThetaMode::sum), 500).has_value());
        CHECK_THROWS_AS(first_mismatch(f, Series::one(50), 60), OutOfRangeError);
    }

    TEST_CASE("zero is canonical") {
        const Series z = poly({1, -1}, 5) - poly({1, -1}, 5);
        CHECK(z.is_zero());
        CHECK(z == Series::zero(5));
        CHECK(z.valuation() == 6);
        CHECK(Series::from_coefficients(3, ints({0, 0, 0}), 5) == Series::zero(5));
    }

    TEST_CASE("normalization strips leading zeros") {
        const Series s = Series::from_coefficients(-2, ints({0, 0, 4, 5}), 3);
        CHECK(s.valuation() == 0);
        CHECK(s.coefficients().size() == 4);
        CHECK(s.coeff(1) == 5);
    }

    TEST_CASE("to_string") {
        CHECK(poly({1, -5, 0, 2}, 3).to_string() == "1 - 5*q + 2*q^3 + O(q^4)");
        CHECK(Series::zero(2).to_string() == "0 + O(q^3)");
    }

    TEST_CASE("pow") {
        const Series f = poly({1, 1}, 10);
        CHECK(coeffs(pow(f, 3), 0, 4) == ints({1, 3, 3, 1, 0}));
        CHECK(pow(f, 0) == Series::one(10));
        CHECK(pow(f, -2) * pow(f, 2) == Series::one(10));
    }
}

TEST_SUITE("series-properties") {
    TEST_CASE("ring axioms on random series") {
        std::mt19937_64 rng(kSeed);
        std::uniform_int_distribution<Exponent> val(-3, 3);
        for (int i = 0; i < kRingCases; ++i) {
            const Series f = random_series(rng, val(rng), kRingOrder);
            const Series g = random_series(rng, val(rng), kRingOrder);
            const Series h = random_series(rng, val(rng), kRingOrder);
            REQUIRE(f + g == g + f);
            REQUIRE(f * g == g * f);
            REQUIRE((f + g) + h == f + (g + h));
            const Series l = (f * g) * h;
            const Series r = f * (g * h);
            REQUIRE(l.order() == r.order());
            REQUIRE(l == r);
            const Series d1 = f * (g + h);
            const Series d2 = f * g + f * h;
            const Exponent o = std::min(d1.order(), d2.order());
            REQUIRE(d1.truncate(o) == d2.truncate(o));
        }
    }

    TEST_CASE("mul agrees with the naive double loop") {
        std::mt19937_64 rng(kSeed + 1);
        std::uniform_int_distribution<Exponent> len(0, 40);
        for (int i = 0; i < kRingCases; ++i) {
            const Series f = random_series(rng, 0, len(rng), 80);
            const Series g = random_series(rng, 0, len(rng), 80);
            const Series h = f * g;
            const auto want = naive(f, g, h.order());
            for (Exponent e = 0; e <= h.order(); ++e) {
                REQUIRE(h.coeff(e) == want[static_cast<std::size_t>(e)]);
            }
        }
    }

    TEST_CASE("kronecker is bit-identical to schoolbook") {
        std::mt19937_64 rng(kSeed + 2);
        std::uniform_int_distribution<Exponent> len(0, 300);
        for (int i = 0; i < 200; ++i) {
            const unsigned bits = i % 4 == 0 ? 400 : 40;
            const Series f = random_series(rng, 0, len(rng), bits);
            const Series g = random_series(rng, 0, len(rng), bits);
            REQUIRE(mul(f, g, MulAlgorithm::kronecker) == mul(f, g, MulAlgorithm::schoolbook));
        }
        const Series e = invert(theta6(2000));
        CHECK(mul(e, e, MulAlgorithm::kronecker) == mul(e, e, MulAlgorithm::schoolbook));
    }

    TEST_CASE("newton inversion matches the recurrence") {
        std::mt19937_64 rng(kSeed + 3);
        for (int i = 0; i < 20; ++i) {
            const Series f = random_unit(rng, i % 3 - 1, 300, 30);
            REQUIRE(invert(f, MulAlgorithm::automatic) == invert(f, MulAlgorithm::schoolbook));
        }
        const Series t = theta6(3000);
        CHECK(invert(t) == invert(t, MulAlgorithm::schoolbook));
    }

    TEST_CASE("invert is a two-sided inverse") {
        std::mt19937_64 rng(kSeed + 4);
        std::uniform_int_distribution<Exponent> val(-3, 3);
        for (int i = 0; i < kInverseCases; ++i) {
            const Series f = random_unit(rng, val(rng), kRingOrder);
            const Series g = invert(f);
            const Series fg = f * g;
            const Series gf = g * f;
            REQUIRE(fg == Series::one(fg.order()));
            REQUIRE(gf == Series::one(gf.order()));
        }
    }

    TEST_CASE("shift is a group action") {
        std::mt19937_64 rng(kSeed + 5);
        std::uniform_int_distribution<Exponent> m(-50, 50);
        for (int i = 0; i < kRingCases; ++i) {
            const Series f = random_series(rng, m(rng) / 10, kRingOrder);
            const Exponent a = m(rng);
            const Exponent b = m(rng);
            REQUIRE(shift(f, a + b) == shift(shift(f, a), b));
            REQUIRE(shift(f, 0) == f);
        }
    }

    TEST_CASE("truncation monotonicity") {
        std::mt19937_64 rng(kSeed + 6);
        std::uniform_int_distribution<Exponent> val(-3, 3);
        std::uniform_int_distribution<Exponent> cut(5, kRingOrder - 1);
        for (int i = 0; i < kRingCases; ++i) {
            const Series f = random_unit(rng, val(rng), kRingOrder);
            const Series g = random_unit(rng, val(rng), kRingOrder);
            const Exponent m = cut(rng);
            const Series fm = f.truncate(m);
            const Series gm = g.truncate(m);

            REQUIRE((f + g).truncate(m) == fm + gm);

            const Series full = f * g;
            const Series low = fm * gm;
            REQUIRE(low.order() <= full.order());
            REQUIRE(full.truncate(low.order()) == low);

            const Series inv_low = invert(fm);
            REQUIRE(invert(f).truncate(inv_low.order()) == inv_low);

            REQUIRE(shift(f, 4).truncate(m + 4) == shift(fm, 4));
        }
    }

    TEST_CASE("products truncate consistently") {
        for (Exponent m : {0, 1, 7, 30}) {
            CHECK(theta6(60).truncate(m) == theta6(m));
            CHECK(pochhammer(2, 3, 60).truncate(m) == pochhammer(2, 3, m));
            CHECK(invert(theta6(60)).truncate(m) == invert(theta6(m)));
        }
    }
}

TEST_SUITE("zseries") {
    TEST_CASE("zcoeff examples") {
        ZSeries f(10);
        f.add_term(1, Series::one(10));
        f.add_term(-1, Series::one(10));
        CHECK(zcoeff(f, 1) == Series::one(10));
        CHECK(zcoeff(f, 5).is_zero());
        CHECK(zcoeff(f, -7).is_zero());
    }

    TEST_CASE("zmul distributes") {
        const auto a = ZSeries::binomial_factor(1, 1, 1, 20);
        const auto b = ZSeries::binomial_factor(-1, -2, 3, 20);
        const auto c = ZSeries::binomial_factor(2, 0, 2, 20);
        CHECK(zmul(a, b + c) == zmul(a, b) + zmul(a, c));
        CHECK(zmul(a, b) == zmul(b, a));
    }

    TEST_CASE("multiply_binomial matches zmul") {
        auto p = ZSeries::binomial_factor(1, 1, 1, 15);
        const auto q = ZSeries::binomial_factor(-1, -1, 2, 15);
        const auto direct = zmul(p, q);
        p.multiply_binomial(-1, -1, 2);
        CHECK(p == direct);
    }

    TEST_CASE("quintuple product matches its sum to order 80 in every z-slice") {
        const auto sides = quintuple_sides(80);
        CHECK_FALSE(first_mismatch(sides.sum, sides.product, 80).has_value());
    }

    TEST_CASE("first_mismatch reports the smallest q-exponent") {
        ZSeries a(10);
        a.add_term(0, Series::one(10));
        ZSeries b = a;
        b.add_term(3, Series::monomial(1, 6, 10));
        b.add_term(-2, Series::monomial(1, 4, 10));
        const auto m = first_mismatch(a, b, 10);
        REQUIRE(m.has_value());
        CHECK(m->first == 4);
        CHECK(m->second == -2);
    }
}
