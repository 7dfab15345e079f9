#include <doctest.h>

#include "helpers.hpp"
#include "qseries/errors.hpp"
#include "qseries/macmahon.hpp"
#include "qseries/oracle.hpp"

using namespace qseries;
using namespace testing;

namespace {

Integer divisor_sum(Exponent n) {
    Integer s = 0;
    for (Exponent d = 1; d <= n; ++d) {
        if (n % d == 0) {
            s += d;
        }
    }
    return s;
}

const FamilySpec kAllFamilies[] = {
    FamilySpec::a(),
    FamilySpec::c(),
    FamilySpec::b(1),
    FamilySpec::b(2),
    FamilySpec::d(0),
    FamilySpec::d(1),
    FamilySpec::d(2),
    FamilySpec::d(1, Reading::printed),
    FamilySpec::agen(1, 3),
    FamilySpec::agen(2, 5),
    FamilySpec::agen(1, 3, Reading::printed),
    FamilySpec::agen(3, 7, Reading::printed),
};

}  // namespace

TEST_SUITE("macmahon") {
    TEST_CASE("A_1 is the divisor-sum series") {
        const Series a1 = family_series(FamilySpec::a(), 1, 30);
        CHECK(coeffs(a1, 0, 6) == ints({0, 1, 3, 4, 7, 6, 12}));
        for (Exponent n = 1; n <= 30; ++n) {
            CHECK(a1.coeff(n) == divisor_sum(n));
        }
    }

    TEST_CASE("leading terms") {
        for (Exponent k = 0; k <= 6; ++k) {
            const Series a = family_series(FamilySpec::a(), k, 40);
            CHECK(a.valuation() == k * (k + 1) / 2);
            CHECK(a.coeff(k * (k + 1) / 2) == 1);
            const Series c = family_series(FamilySpec::c(), k, 40);
            CHECK(c.valuation() == k * k);
            CHECK(c.coeff(k * k) == 1);
        }
    }

    TEST_CASE("family_gen slices") {
        const XPoly x = family_gen(FamilySpec::a(), 5, 30);
        REQUIRE(x.slices.size() == 6);
        CHECK(x.slices[0] == Series::one(30));
        for (Exponent k = 0; k <= 5; ++k) {
            CHECK(x.slices[static_cast<std::size_t>(k)].order() == 30);
            CHECK(x.slices[static_cast<std::size_t>(k)] == family_series(FamilySpec::a(), k, 30));
        }
        CHECK(family_series(FamilySpec::a(), 0, 12) == Series::one(12));
    }

    TEST_CASE("slices beyond the order are zero") {
        const Series a = family_series(FamilySpec::a(), 8, 20);
        CHECK(a.is_zero());
        CHECK(a.order() == 20);
    }

    TEST_CASE("reductions") {
        for (Exponent k = 0; k <= 4; ++k) {
            CHECK(family_series(FamilySpec::b(0), k, 40) == family_series(FamilySpec::a(), k, 40));
            CHECK(family_series(FamilySpec::d(0), k, 40) == family_series(FamilySpec::c(), k, 40));
            CHECK(family_series(FamilySpec::agen(1, 2), k, 40) ==
                  family_series(FamilySpec::c(), k, 40));
        }
    }

    TEST_CASE("printed D reading does not reduce to C") {
        CHECK(family_series(FamilySpec::d(0, Reading::printed), 1, 20) !=
              family_series(FamilySpec::c(), 1, 20));
    }

    TEST_CASE("part sets") {
        CHECK(FamilySpec::b(2).contains(5));
        CHECK_FALSE(FamilySpec::b(2).contains(4));
        CHECK(FamilySpec::d(1).contains(2));
        CHECK(FamilySpec::d(1).contains(4));
        CHECK_FALSE(FamilySpec::d(1).contains(3));
        CHECK(FamilySpec::agen(2, 5).contains(3));
        CHECK(FamilySpec::agen(2, 5).contains(7));
        CHECK_FALSE(FamilySpec::agen(2, 5).contains(5));
        CHECK(FamilySpec::a().valuation_bound(4) == 10);
        CHECK(FamilySpec::agen(1, 3).valuation_bound(3) == 1 + 2 + 4);
        CHECK(FamilySpec::a().max_slice(10) == 4);
    }

    TEST_CASE("validation") {
        CHECK_THROWS_AS(family_gen(FamilySpec::b(-1), 2, 10), DomainError);
        CHECK_THROWS_AS(family_gen(FamilySpec::agen(1, 0), 2, 10), DomainError);
        CHECK_THROWS_AS(family_gen(FamilySpec::a(), -1, 10), DomainError);
        CHECK_THROWS_AS(family_series(FamilySpec::a(), -1, 10), DomainError);
    }

    TEST_CASE("every family agrees with its nested-sum definition") {
        for (const auto& spec : kAllFamilies) {
            for (Exponent k = 0; k <= 3; ++k) {
                INFO(spec.to_string() << " k=" << k);
                CHECK(family_series(spec, k, 25) == oracle::nested_family_oracle(spec, k, 25));
            }
        }
    }

    TEST_CASE("coefficients are nonnegative") {
        for (const auto& spec : kAllFamilies) {
            const XPoly x = family_gen(spec, 4, 40);
            for (const auto& s : x.slices) {
                for (const auto& c : s.coefficients()) {
                    CHECK(c >= 0);
                }
            }
        }
    }

    TEST_CASE("windowed generation is exact") {
        for (const auto& spec : {FamilySpec::a(), FamilySpec::c(), FamilySpec::b(1),
                                 FamilySpec::d(2), FamilySpec::agen(2, 5)}) {
            constexpr Exponent width = 15;
            constexpr Exponent kmax = 6;
            const XPoly w = family_gen_window(spec, kmax, width);
            const Exponent full_order = spec.valuation_bound(kmax) + width;
            const XPoly f = family_gen(spec, kmax, full_order);
            for (Exponent k = 0; k <= kmax; ++k) {
                const Series& ws = w.slices[static_cast<std::size_t>(k)];
                INFO(spec.to_string() << " k=" << k);
                CHECK(ws.order() == spec.valuation_bound(k) + width);
                CHECK(f.slices[static_cast<std::size_t>(k)].truncate(ws.order()) == ws);
            }
        }
    }

    TEST_CASE("truncation monotonicity") {
        const XPoly big = family_gen(FamilySpec::c(), 4, 50);
        const XPoly small = family_gen(FamilySpec::c(), 4, 21);
        for (std::size_t k = 0; k < 5; ++k) {
            CHECK(big.slices[k].truncate(21) == small.slices[k]);
        }
    }
}

TEST_SUITE("p-polynomial") {
    TEST_CASE("examples") {
        CHECK(p_polynomial(0) == ZSeries::monomial(1, 0, 0, 0));
        CHECK(p_polynomial(2).zcoeff(0).coeff(3) == 2);
    }

    TEST_CASE("support and total mass") {
        for (Exponent k = 0; k <= 6; ++k) {
            const ZSeries p = p_polynomial(k);
            Integer total = 0;
            for (const auto& [m, s] : p.terms()) {
                CHECK(m >= -k);
                CHECK(m <= k);
                CHECK(s.valuation() >= 0);
                for (Exponent n = s.valuation(); n <= s.order(); ++n) {
                    if (s.coeff(n) != 0) {
                        CHECK(n <= k * (k + 1));
                    }
                    total += s.coeff(n);
                }
            }
            CHECK(total == Integer(1) << (2 * k));
        }
    }

    TEST_CASE("symmetry in m") {
        for (Exponent k = 0; k <= 6; ++k) {
            const ZSeries p = p_polynomial(k);
            for (Exponent m = 0; m <= k; ++m) {
                CHECK(p.zcoeff(m) == p.zcoeff(-m));
            }
        }
    }

    TEST_CASE("matches pair enumeration") {
        for (Exponent k = 0; k <= 6; ++k) {
            const ZSeries p = p_polynomial(k);
            for (Exponent m = -k; m <= k; ++m) {
                const Series s = p.zcoeff(m);
                for (Exponent n = 0; n <= k * (k + 1); ++n) {
                    CHECK(s.coeff(n) == oracle::p_pair_oracle(k, n, m));
                }
            }
        }
    }
}
