#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qseries/macmahon.hpp"
#include "qseries/report.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Slices F_0..F_kmax of one family to a fixed order, with kmax the last
/// slice whose valuation bound fits.
class FamilyTable {
public:
    FamilyTable(FamilySpec spec, Exponent order);

    const FamilySpec& spec() const noexcept { return spec_; }
    Exponent order() const noexcept { return order_; }
    Exponent kmax() const noexcept { return static_cast<Exponent>(slices_.size()) - 1; }
    Exponent valuation_bound(Exponent k) const;

    /// F_k, or the zero series when k < 0 or beyond kmax.
    Series slice(Exponent k) const;

    /// sum_{k >= |alpha|} binom(2k, k + alpha) F_k to order `neff` (<= order()).
    Series s_sum(Exponent alpha, Exponent neff) const;

private:
    FamilySpec spec_;
    Exponent order_;
    std::vector<Series> slices_;
    std::vector<Exponent> lows_;
};

Series s_sum(const FamilySpec& family, Exponent alpha, Exponent neff);

/// q^(-k(k+1)/2) sum_m binom(2m+1, m+k+1) A_m, claimed equal to 1/(q;q)^3.
Series os1_rhs(Exponent k, Exponent order);
/// q^(-k^2) sum_m binom(2m, m+k) C_m, claimed equal to 1/((q^2;q^2)(q;q^2)^2).
Series os2_rhs(Exponent k, Exponent order);

Series os1_target(Exponent order);
Series os2_target(Exponent order);

Series thm_quin_rhs(Exponent n, Exponent order);

enum class QuinSign {
    adjudicated,  ///< (-1)^((n-k)/2)
    printed,      ///< (-1)^((3n-k)/2)
};

/// Finite approximant of the quintuple lemma, claimed valid through q^n.
Series lem_quin_partial(Exponent n, Exponent order, QuinSign sign = QuinSign::adjudicated);

struct QuinBounds {
    Exponent r1;
    Exponent r2;
    friend bool operator==(const QuinBounds&, const QuinBounds&) = default;
};

struct SeptBounds {
    Exponent s1;
    Exponent s2;
    Exponent s3;
    Exponent s4;
    friend bool operator==(const SeptBounds&, const SeptBounds&) = default;
};

QuinBounds bounds_quin(Exponent n);
SeptBounds bounds_sept(Exponent n);

/// floor((a - sqrt(x)) / b) and ceil((a + sqrt(x)) / b) for b > 0, x >= 0.
Exponent floor_minus_sqrt(Exponent a, Exponent x, Exponent b);
Exponent ceil_plus_sqrt(Exponent a, Exponent x, Exponent b);

/// a(0..mmax) from the quintuple corollary at level n (mmax <= n).
std::vector<Integer> cor_quin_coefficients(Exponent n, Exponent mmax,
                                           QuinSign sign = QuinSign::adjudicated);
Integer cor_quin_a(Exponent n, Exponent m);

enum class SeptVariant { v14, v23 };

enum class SeptPairing {
    as_printed,  ///< (5n^2-n)/2 with 1/(R14 F5), (5n^2-3n)/2 with 1/(R23 F5)
    swapped,
};

enum class SeptTSet {
    corrected,  ///< {5n+1, 5n, 5n-1, 5n-2} in the (5n^2-n)/2 formula
    printed,    ///< {5n+2, 5n+1, 5n-1, 5n-2}
};

/// 1/(R14 F5) for v14 and 1/(R23 F5) for v23.
Series sept_target(SeptVariant v, Exponent order);

Series thm_sept_rhs(SeptVariant v, Exponent n, Exponent order,
                    SeptPairing pairing = SeptPairing::as_printed,
                    SeptTSet tset = SeptTSet::corrected);

/// Series the septuple lemma approximant for `v` converges to. The lemma's
/// b_{1,4} approximant tends to 1/(R23 F5) and b_{2,3} to 1/(R14 F5).
Series lem_sept_target(SeptVariant v, Exponent order);

/// Septuple lemma approximant, claimed valid through q^n (n >= 2).
Series lem_sept_partial(SeptVariant v, Exponent n, Exponent order);

std::vector<Integer> cor_sept_coefficients(SeptVariant v, Exponent n, Exponent mmax);
Integer cor_sept_b(SeptVariant v, Exponent n, Exponent m);

enum class JtpVariant {
    derived,     ///< re-derived statement (part 1 through P([2 beta]))
    prefactor,   ///< re-derived statement through the explicit finite prefactor
    printed,     ///< the statement exactly as printed
};

/// 1/((q;q)(q^(2b+1);q)^2) for part 1, 1/((q^2;q^2)(q^(g+1);q^2)^2) for part 2.
Series jtp_target(int part, Exponent param, Exponent order);

Series thm_jtp_rhs(int part, Exponent k, Exponent param, Exponent order,
                   JtpVariant variant = JtpVariant::derived,
                   Reading d_reading = Reading::adjudicated);

/// q^(-j(jn-2l+n)/2) sum_k binom(2k, j+k) A_{l,n,k}. Requires 1 <= l < n, j >= 0.
Series thm16_rhs(Exponent ell, Exponent n, Exponent j, Exponent order,
                 Reading reading = Reading::adjudicated);

enum class IdentityId {
    OS1,
    OS2,
    THM_QUIN,
    LEM_QUIN,
    COR_QUIN,
    THM_SEPT_14,
    THM_SEPT_23,
    LEM_SEPT_14,
    LEM_SEPT_23,
    COR_SEPT_14,
    COR_SEPT_23,
    JTP1,
    JTP2,
    THM16,
    QUINTUPLE,
    SEPTUPLE,
    JTP_ODD,
    JTP_EVEN,
};

std::string to_string(IdentityId id);
std::optional<IdentityId> parse_identity(const std::string& name);
std::vector<IdentityId> all_identities();

/// Parameter names of an identity, in report order.
std::vector<std::string> identity_params(IdentityId id);

using ParamMap = std::map<std::string, Exponent>;

struct VerifyOptions {
    QuinSign quin_sign = QuinSign::adjudicated;
    SeptTSet sept_tset = SeptTSet::corrected;
    JtpVariant jtp = JtpVariant::derived;
    Reading d_reading = Reading::adjudicated;
    Reading agen_reading = Reading::adjudicated;
};

/// Builds both sides of one identity cell and compares them. Missing
/// parameters or values outside the domain throw DomainError.
IdentityReport verify(IdentityId id, const ParamMap& params, Exponent order,
                      const VerifyOptions& options = {});

}  // namespace qseries
