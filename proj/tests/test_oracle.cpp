#include <doctest.h>

#include "helpers.hpp"
#include "qseries/errors.hpp"
#include "qseries/identities.hpp"
#include "qseries/oracle.hpp"
#include "qseries/products.hpp"

using namespace qseries;
using namespace qseries::oracle;
using namespace testing;

TEST_SUITE("oracle") {
    TEST_CASE("m examples") {
        CHECK(m_oracle(1, 6) == 12);
        for (Exponent k = 0; k <= 4; ++k) {
            CHECK(m_oracle(k, k * (k + 1) / 2) == 1);
            CHECK(m_oracle(k, k * (k + 1) / 2 - 1 < 0 ? 0 : k * (k + 1) / 2 - 1) == (k == 0 ? 1 : 0));
        }
        CHECK(m_oracle(0, 0) == 1);
        CHECK(m_oracle(0, 5) == 0);
    }

    TEST_CASE("m_odd examples") {
        CHECK(modd_oracle(1, 3) == 4);
        for (Exponent k = 0; k <= 4; ++k) {
            CHECK(modd_oracle(k, k * k) == 1);
        }
        CHECK(modd_oracle(0, 0) == 1);
    }

    TEST_CASE("p3 and overpartitions") {
        CHECK(p3_oracle(0) == 1);
        std::vector<Integer> p3;
        std::vector<Integer> ov;
        for (Exponent n = 0; n <= 4; ++n) {
            p3.push_back(p3_oracle(n));
            ov.push_back(overp_oracle(n));
        }
        CHECK(p3 == ints({1, 3, 9, 22, 51}));
        CHECK(ov == ints({1, 2, 4, 8, 14}));
    }

    TEST_CASE("p3 and overpartitions match the reciprocals to n = 40") {
        const Series a = os1_target(40);
        const Series b = os2_target(40);
        for (Exponent n = 0; n <= 40; ++n) {
            CHECK(p3_oracle(n) == a.coeff(n));
            CHECK(overp_oracle(n) == b.coeff(n));
        }
    }

    TEST_CASE("pairs") {
        CHECK(p_pair_oracle(2, 3, 0) == 2);
        for (Exponent k = 0; k <= 6; ++k) {
            CHECK(p_pair_oracle(k, 0, 0) == 1);
            Integer total = 0;
            for (Exponent n = 0; n <= k * (k + 1); ++n) {
                for (Exponent m = -k; m <= k; ++m) {
                    total += p_pair_oracle(k, n, m);
                }
            }
            CHECK(total == Integer(1) << (2 * k));
        }
    }

    TEST_CASE("nested family examples") {
        CHECK(coeffs(nested_family_oracle(FamilySpec::a(), 1, 10), 0, 4) == ints({0, 1, 3, 4, 7}));
        // the (1,2) term alone gives q^3 + 2q^4; (1,3) adds another q^4
        CHECK(coeffs(nested_family_oracle(FamilySpec::a(), 2, 5), 0, 4) == ints({0, 0, 0, 1, 3}));
        CHECK(coeffs(nested_family_oracle(FamilySpec::c(), 1, 5), 0, 3) == ints({0, 1, 2, 4}));
    }

    TEST_CASE("m and m_odd match the series slices") {
        const XPoly a = family_gen(FamilySpec::a(), 4, 30);
        const XPoly c = family_gen(FamilySpec::c(), 4, 30);
        for (Exponent k = 0; k <= 4; ++k) {
            for (Exponent n = 0; n <= 30; ++n) {
                CHECK(m_oracle(k, n) == a.slices[static_cast<std::size_t>(k)].coeff(n));
                CHECK(modd_oracle(k, n) == c.slices[static_cast<std::size_t>(k)].coeff(n));
            }
        }
    }

    TEST_CASE("caps are hard errors") {
        CHECK_THROWS_AS(m_oracle(5, 10), CapExceededError);
        CHECK_THROWS_AS(m_oracle(2, 31), CapExceededError);
        CHECK_THROWS_AS(modd_oracle(1, 31), CapExceededError);
        CHECK_THROWS_AS(p3_oracle(61), CapExceededError);
        CHECK_THROWS_AS(overp_oracle(61), CapExceededError);
        CHECK_THROWS_AS(p_pair_oracle(7, 0, 0), CapExceededError);
        CHECK_THROWS_AS(nested_family_oracle(FamilySpec::a(), 7, 10), CapExceededError);
        CHECK_THROWS_AS(nested_family_oracle(FamilySpec::a(), 1, 61), CapExceededError);
        CHECK_THROWS_AS(m_oracle(-1, 3), DomainError);
    }
}
