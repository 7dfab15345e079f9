#pragma once

#include <vector>

#include "qseries/report.hpp"
#include "qseries/series.hpp"
#include "qseries/zseries.hpp"

namespace qseries {

/// (sign * q^start; q^step)_inf ^ power, i.e. prod_{n>=0} (1 - sign q^(start + n step))^power.
struct PochhammerFactor {
    Exponent start = 1;
    Exponent step = 1;
    int sign = 1;
    int power = 1;
};

/// Finite product of q-Pochhammer powers. Factors with negative power must
/// have start >= 1 so the product stays a unit series.
struct ProductSpec {
    std::vector<PochhammerFactor> factors;
};

/// Expands the product to order N (throws DomainError on an invalid factor).
Series expand(const ProductSpec& spec, Exponent order);

/// (q^a; q^d)_inf truncated to order N. a = 0 gives the zero series.
Series pochhammer(Exponent a, Exponent d, Exponent order);

enum class ThetaMode { product, sum };

/// Theta_6(q) = (q;q)^3 (q;q^2)^2 = 1/2 sum_n chi_6(n) n q^((n^2-1)/24).
Series theta6(Exponent order, ThetaMode mode = ThetaMode::product);

struct RogersRamanujanProducts {
    Series r14;  ///< 1/((q;q^5)(q^4;q^5))
    Series r23;  ///< 1/((q^2;q^5)(q^3;q^5))
    Series f5;   ///< (q;q)^6/(q^5;q^5)
};

RogersRamanujanProducts rr_products(Exponent order);

/// Both sides of the classical bivariate product identities, truncated at
/// q-order N. Sum sides include a term iff its q-exponent is <= N; product
/// sides include every factor whose q-exponent is <= N.
struct BivariateSides {
    ZSeries sum;
    ZSeries product;
};

BivariateSides quintuple_sides(Exponent order);
BivariateSides septuple_sides(Exponent order);

enum class JtpForm {
    odd,   ///< sum (-1)^n q^(n(n+1)/2) z^(2n+1) = (z - 1/z) prod (1-q^n)(1-z^-2 q^n)(1-z^2 q^n)
    even,  ///< sum q^(n^2) z^n = prod (1-q^(2n+2))(1+z^-1 q^(2n+1))(1+z q^(2n+1))
};

BivariateSides jtp_sides(Exponent order, JtpForm form);

IdentityReport verify_quintuple(Exponent order);
IdentityReport verify_septuple(Exponent order);
IdentityReport verify_jtp(Exponent order, JtpForm form);

/// Left side of the arithmetic-progression product theorem:
///   prod_{m>=1} (1+q^{nm})(1+q^{2nm-n(j+2)+2l})(1+q^{2nm+nj-2l})
///             / ((1-q^{nm})(1-q^{nm+l-n})^2 (1-q^{nm-l})^2).
/// Requires n >= 1, 1 <= l < n, 2l != n, j >= 0.
Series thm16_lhs(Exponent ell, Exponent n, Exponent j, Exponent order);

}  // namespace qseries
