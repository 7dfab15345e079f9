#include "qseries/identities.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "qseries/errors.hpp"
#include "qseries/products.hpp"

namespace qseries {

namespace {

bool is_odd(Exponent x) { return (x % 2 + 2) % 2 == 1; }
Integer sign_of(Exponent half) { return is_odd(half) ? Integer(-1) : Integer(1); }

Series shift_truncate(const Series& s, Exponent by, Exponent order) {
    return shift(s, -by).truncate(order);
}

// Polynomial with nonnegative-or-negative exponents lifted to a series of the given order.
Series lift(const Series& poly, Exponent order) {
    if (poly.is_zero()) {
        return Series::zero(order);
    }
    std::vector<Integer> c(poly.coefficients().begin(), poly.coefficients().end());
    return Series::from_coefficients(poly.valuation(), std::move(c), order);
}

// sum over (t, sign) of sign * sum_{alpha = t mod 2} (-1)^((t-alpha)/2) S_X(alpha) S_Y((t-alpha)/2),
// times q^(-shift), to order N. X and Y must be tabulated to order N + shift.
Series theta_pair_sum(const FamilyTable& x, const FamilyTable& y,
                      const std::vector<std::pair<Exponent, int>>& tset, Exponent shift,
                      Exponent order) {
    const Exponent work = order + shift;
    std::map<Exponent, Series> sx;
    std::map<Exponent, Series> sy;
    auto cached = [work](std::map<Exponent, Series>& cache, const FamilyTable& f, Exponent a) {
        auto it = cache.find(a);
        if (it == cache.end()) {
            it = cache.emplace(a, f.s_sum(a, work)).first;
        }
        return it->second;
    };
    Series total = Series::zero(work);
    for (const auto& [t, sg] : tset) {
        for (Exponent alpha = -x.kmax(); alpha <= x.kmax(); ++alpha) {
            if (is_odd(t - alpha)) {
                continue;
            }
            const Exponent beta = (t - alpha) / 2;
            if (x.valuation_bound(std::abs(alpha)) + y.valuation_bound(std::abs(beta)) > work) {
                continue;
            }
            Series term = (cached(sx, x, alpha) * cached(sy, y, beta)).truncate(work);
            term *= sign_of(beta) * sg;
            total += term;
        }
    }
    return shift_truncate(total, shift, order);
}

// One product X_a * Y_b with integer weight, as used by the finite lemma and corollary sums.
struct PairTerm {
    Exponent a;
    Exponent b;
    Integer c;
};

Series full_pair_sum(const FamilySpec& fx, const FamilySpec& fy, const std::vector<PairTerm>& terms,
                     Exponent shift, Exponent order) {
    const Exponent work = order + shift;
    const FamilyTable x(fx, work);
    const FamilyTable y(fy, work);
    Series total = Series::zero(work);
    for (const auto& t : terms) {
        Series term = (x.slice(t.a) * y.slice(t.b)).truncate(work);
        term *= t.c;
        total += term;
    }
    return shift_truncate(total, shift, order);
}

// Coefficients of q^(shift + m), m = 0..mmax, of sum c X_a Y_b. Only the
// windows of each slice that can reach those exponents are generated.
std::vector<Integer> windowed_pair_coefficients(const FamilySpec& fx, const FamilySpec& fy,
                                                const std::vector<PairTerm>& terms, Exponent shift,
                                                Exponent mmax) {
    Exponent width = 0;
    Exponent kx = 0;
    Exponent ky = 0;
    for (const auto& t : terms) {
        width = std::max(width, shift + mmax - fx.valuation_bound(t.a) - fy.valuation_bound(t.b));
        kx = std::max(kx, t.a);
        ky = std::max(ky, t.b);
    }
    const XPoly x = family_gen_window(fx, fx == fy ? std::max(kx, ky) : kx, width);
    const XPoly y = fx == fy ? XPoly{} : family_gen_window(fy, ky, width);
    const XPoly& yy = fx == fy ? x : y;

    std::vector<Integer> out(static_cast<std::size_t>(mmax + 1));
    for (const auto& t : terms) {
        const Series& xa = x.slices[static_cast<std::size_t>(t.a)];
        const Series& yb = yy.slices[static_cast<std::size_t>(t.b)];
        if (xa.is_zero() || yb.is_zero()) {
            continue;
        }
        const auto xc = xa.coefficients();
        const auto yc = yb.coefficients();
        for (Exponent m = 0; m <= mmax; ++m) {
            const Exponent e = shift + m;
            Integer acc = 0;
            const Exponent rmax = std::min(xa.order(), e - yb.valuation());
            for (Exponent r = xa.valuation(); r <= rmax; ++r) {
                const Exponent s = e - r;
                if (s > yb.order()) {
                    continue;
                }
                mpz_addmul(acc.get_mpz_t(), xc[static_cast<std::size_t>(r - xa.valuation())].get_mpz_t(),
                           yc[static_cast<std::size_t>(s - yb.valuation())].get_mpz_t());
            }
            out[static_cast<std::size_t>(m)] += t.c * acc;
        }
    }
    return out;
}

// Elementary symmetric polynomials e_0..e_r of {q^e : e in exps}.
std::vector<Series> elementary(const std::vector<Exponent>& exps, Exponent order) {
    std::vector<std::map<Exponent, Integer>> e(exps.size() + 1);
    e[0][0] = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        for (std::size_t r = i + 1; r >= 1; --r) {
            for (const auto& [x, c] : std::map<Exponent, Integer>(e[r - 1])) {
                e[r][x + exps[i]] += c;
            }
        }
    }
    std::vector<Series> out;
    for (const auto& poly : e) {
        Series s = Series::zero(order);
        for (const auto& [x, c] : poly) {
            s += Series::monomial(c, x, order);
        }
        out.push_back(s);
    }
    return out;
}

// q^(-shift) sum_r e_r S_F(k + r) with a finite prefactor prod (1 + w^-1 q^e).
Series prefactor_sum(const FamilySpec& spec, const std::vector<Exponent>& exps, Exponent k,
                     Exponent shift, Exponent order) {
    Exponent negative_mass = 0;
    for (const Exponent e : exps) {
        negative_mass += std::max<Exponent>(-e, 0);
    }
    const Exponent work = order + shift + negative_mass;
    const FamilyTable f(spec, work);
    const auto e = elementary(exps, work);
    Series total = Series::zero(work);
    for (std::size_t r = 0; r < e.size(); ++r) {
        total += e[r] * f.s_sum(k + static_cast<Exponent>(r), work);
    }
    return shift_truncate(total, shift, order);
}

// q^(-shift) sum_{kk in ks} sum_m P_m(q) S_F(kk - m + offset), P_m = sum_t P([size], t, m) q^t.
Series p_weighted_sum(const FamilySpec& spec, Exponent size, const std::vector<Exponent>& ks,
                      Exponent offset, Exponent shift, Exponent order) {
    const Exponent work = order + shift;
    const FamilyTable f(spec, work);
    const ZSeries p = p_polynomial(size, work);
    Series total = Series::zero(work);
    for (const auto& [m, pm] : p.terms()) {
        const Series lifted = lift(pm, work);
        for (const Exponent kk : ks) {
            total += (lifted * f.s_sum(kk - m + offset, work)).truncate(work);
        }
    }
    return shift_truncate(total, shift, order);
}

Series reciprocal_product(std::initializer_list<std::pair<Series, Exponent>> factors,
                          Exponent order) {
    Series prod = Series::one(order);
    for (const auto& [f, power] : factors) {
        prod = prod * pow(f, power);
    }
    return invert(prod);
}

std::vector<PairTerm> quin_terms(Exponent n, QuinSign sign) {
    const auto [r1, r2] = bounds_quin(n);
    std::vector<PairTerm> terms;
    for (Exponent k = std::max<Exponent>(r1, 0); k <= r2; ++k) {
        if (is_odd(k - n) || 3 * n - k < 0) {
            continue;
        }
        const Exponent half = sign == QuinSign::adjudicated ? (n - k) / 2 : (3 * n - k) / 2;
        terms.push_back({k, (3 * n - k) / 2, sign_of(half)});
    }
    return terms;
}

Exponent quin_shift(Exponent n) { return (3 * n * n + n) / 2; }

struct SeptLemma {
    Exponent shift;
    std::vector<PairTerm> terms;
};

SeptLemma sept_lemma(SeptVariant v, Exponent n) {
    if (n < 2) {
        throw DomainError("the septuple lemma needs n >= 2");
    }
    const SeptBounds b = bounds_sept(n);
    SeptLemma out;
    if (v == SeptVariant::v14) {
        out.shift = (5 * n * n - 3 * n) / 2;
        for (Exponent k = std::max<Exponent>(b.s1, 0); k <= b.s2; ++k) {
            if (is_odd(k - (n - 1)) || 5 * n - 3 - k < 0) {
                continue;
            }
            out.terms.push_back({k, (5 * n - 3 - k) / 2, sign_of((n - 1 - k) / 2)});
        }
        out.terms.push_back({n, 2 * n - 1, Integer(2 * n + 1)});
    } else {
        out.shift = (5 * n * n - n) / 2;
        for (Exponent k = std::max<Exponent>(b.s3, 0); k <= b.s4; ++k) {
            if (is_odd(k - n) || 5 * n - 2 - k < 0) {
                continue;
            }
            out.terms.push_back({k, (5 * n - 2 - k) / 2, sign_of((n - k) / 2)});
        }
        out.terms.push_back({n - 1, 2 * n, Integer(-(2 * n - 1))});
    }
    return out;
}

void check_thm16(Exponent ell, Exponent n, Exponent j) {
    if (n < 1 || ell < 1 || ell >= n || j < 0) {
        throw DomainError("need 1 <= l < n and j >= 0 (got l=" + std::to_string(ell) +
                          ", n=" + std::to_string(n) + ", j=" + std::to_string(j) + ")");
    }
}

}  // namespace

FamilyTable::FamilyTable(FamilySpec spec, Exponent order) : spec_(spec), order_(order) {
    const Exponent kmax = spec_.max_slice(std::max<Exponent>(order, 0));
    slices_ = family_gen(spec_, kmax, order).slices;
    for (Exponent k = 0; k <= kmax + 1; ++k) {
        lows_.push_back(spec_.valuation_bound(k));
    }
}

Exponent FamilyTable::valuation_bound(Exponent k) const {
    if (k < static_cast<Exponent>(lows_.size())) {
        return lows_[static_cast<std::size_t>(k)];
    }
    return spec_.valuation_bound(k);
}

Series FamilyTable::slice(Exponent k) const {
    if (k < 0 || k > kmax()) {
        return Series::zero(order_);
    }
    return slices_[static_cast<std::size_t>(k)];
}

Series FamilyTable::s_sum(Exponent alpha, Exponent neff) const {
    if (neff > order_) {
        throw OutOfRangeError("s_sum order " + std::to_string(neff) + " exceeds table order " +
                              std::to_string(order_));
    }
    Series total = Series::zero(neff);
    for (Exponent k = std::abs(alpha); k <= kmax() && valuation_bound(k) <= neff; ++k) {
        Series term = slices_[static_cast<std::size_t>(k)].truncate(neff);
        term *= binomial(2 * k, k + alpha);
        total += term;
    }
    return total;
}

Series s_sum(const FamilySpec& family, Exponent alpha, Exponent neff) {
    return FamilyTable(family, neff).s_sum(alpha, neff);
}

Series os1_rhs(Exponent k, Exponent order) {
    if (k < 0) {
        throw DomainError("OS1 needs k >= 0");
    }
    const Exponent sh = k * (k + 1) / 2;
    const FamilyTable a(FamilySpec::a(), order + sh);
    return shift_truncate(a.s_sum(k, order + sh) + a.s_sum(k + 1, order + sh), sh, order);
}

Series os2_rhs(Exponent k, Exponent order) {
    if (k < 0) {
        throw DomainError("OS2 needs k >= 0");
    }
    const Exponent sh = k * k;
    return shift_truncate(s_sum(FamilySpec::c(), k, order + sh), sh, order);
}

Series os1_target(Exponent order) { return invert(pow(pochhammer(1, 1, order), 3)); }

Series os2_target(Exponent order) {
    return reciprocal_product({{pochhammer(2, 2, order), 1}, {pochhammer(1, 2, order), 2}}, order);
}

Series thm_quin_rhs(Exponent n, Exponent order) {
    const Exponent sh = quin_shift(n);
    const FamilyTable a(FamilySpec::a(), order + sh);
    const FamilyTable c(FamilySpec::c(), order + sh);
    Series r = theta_pair_sum(a, c, {{3 * n + 1, 1}, {3 * n, 1}}, sh, order);
    r *= sign_of(n);
    return r;
}

Series lem_quin_partial(Exponent n, Exponent order, QuinSign sign) {
    if (n < 1) {
        throw DomainError("the quintuple lemma needs n >= 1");
    }
    return full_pair_sum(FamilySpec::a(), FamilySpec::c(), quin_terms(n, sign), quin_shift(n),
                         order);
}

Exponent floor_minus_sqrt(Exponent a, Exponent x, Exponent b) {
    // largest t with a - b t >= 0 and (a - b t)^2 >= x
    Exponent t = a >= 0 ? a / b : -((-a + b - 1) / b);
    while (true) {
        const Integer d = Integer(a) - Integer(b) * Integer(t);
        if (d * d >= x) {
            return t;
        }
        --t;
    }
}

Exponent ceil_plus_sqrt(Exponent a, Exponent x, Exponent b) {
    // smallest t with b t - a >= 0 and (b t - a)^2 >= x
    Exponent t = a >= 0 ? (a + b - 1) / b : -((-a) / b);
    while (true) {
        const Integer d = Integer(b) * Integer(t) - Integer(a);
        if (d * d >= x) {
            return t;
        }
        ++t;
    }
}

QuinBounds bounds_quin(Exponent n) {
    if (n < 1) {
        throw DomainError("bounds_quin needs n >= 1");
    }
    const Exponent x = 12 * n + 13;
    return {floor_minus_sqrt(3 * n - 1, x, 3) + 1, ceil_plus_sqrt(3 * n - 1, x, 3) - 1};
}

SeptBounds bounds_sept(Exponent n) {
    if (n < 2) {
        throw DomainError("bounds_sept needs n >= 2");
    }
    const Exponent x1 = 40 * n + 41;
    const Exponent x2 = 40 * n + 49;
    return {floor_minus_sqrt(5 * n - 4, x1, 5) + 1, ceil_plus_sqrt(5 * n - 4, x1, 5) - 1,
            floor_minus_sqrt(5 * n - 3, x2, 5) + 1, ceil_plus_sqrt(5 * n - 3, x2, 5) - 1};
}

std::vector<Integer> cor_quin_coefficients(Exponent n, Exponent mmax, QuinSign sign) {
    if (n < 1 || mmax < 0 || mmax > n) {
        throw DomainError("the quintuple corollary needs n >= 1 and 0 <= m <= n");
    }
    return windowed_pair_coefficients(FamilySpec::a(), FamilySpec::c(), quin_terms(n, sign),
                                      quin_shift(n), mmax);
}

Integer cor_quin_a(Exponent n, Exponent m) {
    if (m < 0 || m > n) {
        throw DomainError("the quintuple corollary needs 0 <= m <= n");
    }
    return cor_quin_coefficients(n, m).back();
}

Series sept_target(SeptVariant v, Exponent order) {
    const auto rr = rr_products(order);
    return invert((v == SeptVariant::v14 ? rr.r14 : rr.r23) * rr.f5);
}

Series thm_sept_rhs(SeptVariant v, Exponent n, Exponent order, SeptPairing pairing,
                    SeptTSet tset) {
    const bool high = (v == SeptVariant::v14) == (pairing == SeptPairing::as_printed);
    const Exponent sh = high ? (5 * n * n - n) / 2 : (5 * n * n - 3 * n) / 2;
    std::vector<std::pair<Exponent, int>> ts;
    if (!high) {
        ts = {{5 * n, 1}, {5 * n - 1, 1}, {5 * n - 2, -1}, {5 * n - 3, -1}};
    } else if (tset == SeptTSet::corrected) {
        ts = {{5 * n + 1, 1}, {5 * n, 1}, {5 * n - 1, -1}, {5 * n - 2, -1}};
    } else {
        ts = {{5 * n + 2, 1}, {5 * n + 1, 1}, {5 * n - 1, -1}, {5 * n - 2, -1}};
    }
    const FamilyTable a(FamilySpec::a(), order + sh);
    return theta_pair_sum(a, a, ts, sh, order);
}

Series lem_sept_target(SeptVariant v, Exponent order) {
    return sept_target(v == SeptVariant::v14 ? SeptVariant::v23 : SeptVariant::v14, order);
}

Series lem_sept_partial(SeptVariant v, Exponent n, Exponent order) {
    const SeptLemma lem = sept_lemma(v, n);
    return full_pair_sum(FamilySpec::a(), FamilySpec::a(), lem.terms, lem.shift, order);
}

std::vector<Integer> cor_sept_coefficients(SeptVariant v, Exponent n, Exponent mmax) {
    if (mmax < 0 || mmax > n) {
        throw DomainError("the septuple corollary needs 0 <= m <= n");
    }
    const SeptLemma lem = sept_lemma(v, n);
    return windowed_pair_coefficients(FamilySpec::a(), FamilySpec::a(), lem.terms, lem.shift,
                                      mmax);
}

Integer cor_sept_b(SeptVariant v, Exponent n, Exponent m) {
    if (m < 0 || m > n) {
        throw DomainError("the septuple corollary needs 0 <= m <= n");
    }
    return cor_sept_coefficients(v, n, m).back();
}

Series jtp_target(int part, Exponent param, Exponent order) {
    if (param < 0) {
        throw DomainError("JTP parameter must be >= 0");
    }
    if (part == 1) {
        return reciprocal_product(
            {{pochhammer(1, 1, order), 1}, {pochhammer(2 * param + 1, 1, order), 2}}, order);
    }
    if (part == 2) {
        return reciprocal_product(
            {{pochhammer(2, 2, order), 1}, {pochhammer(param + 1, 2, order), 2}}, order);
    }
    throw DomainError("JTP part must be 1 or 2");
}

Series thm_jtp_rhs(int part, Exponent k, Exponent param, Exponent order, JtpVariant variant,
                   Reading d_reading) {
    if (k < 0 || param < 0) {
        throw DomainError("JTP needs k >= 0 and a parameter >= 0");
    }
    if (part == 1) {
        const Exponent beta = param;
        const FamilySpec b = FamilySpec::b(beta);
        const Exponent base = k * (k + 1) / 2 + 2 * beta * k;
        switch (variant) {
            case JtpVariant::derived:
                return p_weighted_sum(b, 2 * beta, {k, k + 1}, 2 * beta,
                                      base + beta * (2 * beta + 1), order);
            case JtpVariant::prefactor: {
                std::vector<Exponent> exps;
                for (Exponent e = -2 * beta; e <= 2 * beta; ++e) {
                    exps.push_back(e);
                }
                return prefactor_sum(b, exps, k, base, order);
            }
            case JtpVariant::printed:
                return p_weighted_sum(b, 2 * beta, {k, k - 1}, 2 * beta,
                                      base + 2 * beta * (2 * beta + 1), order);
        }
    }
    if (part == 2) {
        const Exponent gamma = param;
        const FamilySpec d = FamilySpec::d(gamma, d_reading);
        if (variant == JtpVariant::printed) {
            return p_weighted_sum(d, gamma - 1, {k, k - 1}, gamma - 1,
                                  k * k + gamma * k + gamma * (gamma - 1) / 2, order);
        }
        std::vector<Exponent> exps;
        for (Exponent i = 0; i < gamma; ++i) {
            exps.push_back(2 * i + 1 - gamma);
        }
        return prefactor_sum(d, exps, k, k * k + gamma * k, order);
    }
    throw DomainError("JTP part must be 1 or 2");
}

Series thm16_rhs(Exponent ell, Exponent n, Exponent j, Exponent order, Reading reading) {
    check_thm16(ell, n, j);
    const Exponent sh = j * (j * n - 2 * ell + n) / 2;
    return shift_truncate(s_sum(FamilySpec::agen(ell, n, reading), j, order + sh), sh, order);
}

namespace {

struct IdName {
    IdentityId id;
    const char* name;
};

constexpr IdName kNames[] = {
    {IdentityId::OS1, "OS1"},
    {IdentityId::OS2, "OS2"},
    {IdentityId::THM_QUIN, "THM-QUIN"},
    {IdentityId::LEM_QUIN, "LEM-QUIN"},
    {IdentityId::COR_QUIN, "COR-QUIN"},
    {IdentityId::THM_SEPT_14, "THM-SEPT-14"},
    {IdentityId::THM_SEPT_23, "THM-SEPT-23"},
    {IdentityId::LEM_SEPT_14, "LEM-SEPT-14"},
    {IdentityId::LEM_SEPT_23, "LEM-SEPT-23"},
    {IdentityId::COR_SEPT_14, "COR-SEPT-14"},
    {IdentityId::COR_SEPT_23, "COR-SEPT-23"},
    {IdentityId::JTP1, "JTP1"},
    {IdentityId::JTP2, "JTP2"},
    {IdentityId::THM16, "THM16"},
    {IdentityId::QUINTUPLE, "QUINTUPLE"},
    {IdentityId::SEPTUPLE, "SEPTUPLE"},
    {IdentityId::JTP_ODD, "JTP-ODD"},
    {IdentityId::JTP_EVEN, "JTP-EVEN"},
};

Exponent require(const ParamMap& params, const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end()) {
        throw DomainError("missing parameter " + name);
    }
    return it->second;
}

std::string mismatch_note(const std::optional<Exponent>& m) {
    return m ? "mismatch at q^" + std::to_string(*m) : "exact";
}

std::optional<Exponent> compare(const Series& a, const Series& b, Exponent order) {
    return first_mismatch(a, b, order);
}

std::optional<Exponent> compare_coefficients(const std::vector<Integer>& got, const Series& want) {
    for (std::size_t m = 0; m < got.size(); ++m) {
        if (got[m] != want.coeff(static_cast<Exponent>(m))) {
            return static_cast<Exponent>(m);
        }
    }
    return std::nullopt;
}

}  // namespace

std::string to_string(IdentityId id) {
    for (const auto& e : kNames) {
        if (e.id == id) {
            return e.name;
        }
    }
    return "?";
}

std::optional<IdentityId> parse_identity(const std::string& name) {
    for (const auto& e : kNames) {
        if (name == e.name) {
            return e.id;
        }
    }
    return std::nullopt;
}

std::vector<IdentityId> all_identities() {
    std::vector<IdentityId> out;
    for (const auto& e : kNames) {
        out.push_back(e.id);
    }
    return out;
}

std::vector<std::string> identity_params(IdentityId id) {
    switch (id) {
        case IdentityId::OS1:
        case IdentityId::OS2:
            return {"k"};
        case IdentityId::THM_QUIN:
        case IdentityId::LEM_QUIN:
        case IdentityId::COR_QUIN:
        case IdentityId::THM_SEPT_14:
        case IdentityId::THM_SEPT_23:
        case IdentityId::LEM_SEPT_14:
        case IdentityId::LEM_SEPT_23:
        case IdentityId::COR_SEPT_14:
        case IdentityId::COR_SEPT_23:
            return {"n"};
        case IdentityId::JTP1:
            return {"beta", "k"};
        case IdentityId::JTP2:
            return {"gamma", "k"};
        case IdentityId::THM16:
            return {"l", "n", "j"};
        case IdentityId::QUINTUPLE:
        case IdentityId::SEPTUPLE:
        case IdentityId::JTP_ODD:
        case IdentityId::JTP_EVEN:
            return {};
    }
    return {};
}

IdentityReport verify(IdentityId id, const ParamMap& params, Exponent order,
                      const VerifyOptions& options) {
    if (order < 0) {
        throw DomainError("order must be >= 0");
    }
    Stopwatch clock;
    Params used;
    for (const auto& name : identity_params(id)) {
        used.emplace_back(name, require(params, name));
    }
    const std::string name = to_string(id);
    auto get = [&](const char* key) { return require(params, key); };

    IdentityReport report;
    switch (id) {
        case IdentityId::OS1:
            report = make_exact_report(name, used, order,
                                       compare(os1_rhs(get("k"), order), os1_target(order), order));
            break;
        case IdentityId::OS2:
            report = make_exact_report(name, used, order,
                                       compare(os2_rhs(get("k"), order), os2_target(order), order));
            break;
        case IdentityId::THM_QUIN: {
            const Series target = invert(theta6(order));
            report = make_exact_report(name, used, order,
                                       compare(thm_quin_rhs(get("n"), order), target, order));
            break;
        }
        case IdentityId::LEM_QUIN: {
            const Exponent n = get("n");
            const Exponent work = std::max(order, n);
            const Series approx = lem_quin_partial(n, work, options.quin_sign);
            report = make_claimed_report(
                name, used, work, n, compare(approx, invert(theta6(work)), work),
                options.quin_sign == QuinSign::adjudicated ? "sign=(-1)^((n-k)/2)"
                                                           : "sign=(-1)^((3n-k)/2)");
            break;
        }
        case IdentityId::COR_QUIN: {
            const Exponent n = get("n");
            const auto got = cor_quin_coefficients(n, n, options.quin_sign);
            report = make_exact_report(name, used, n,
                                       compare_coefficients(got, invert(theta6(n))),
                                       options.quin_sign == QuinSign::adjudicated
                                           ? "sign=(-1)^((n-k)/2)"
                                           : "sign=(-1)^((3n-k)/2)");
            break;
        }
        case IdentityId::THM_SEPT_14:
        case IdentityId::THM_SEPT_23: {
            const SeptVariant v =
                id == IdentityId::THM_SEPT_14 ? SeptVariant::v14 : SeptVariant::v23;
            const Exponent n = get("n");
            const Series target = sept_target(v, order);
            const auto printed = compare(
                thm_sept_rhs(v, n, order, SeptPairing::as_printed, options.sept_tset), target, order);
            const auto swapped = compare(
                thm_sept_rhs(v, n, order, SeptPairing::swapped, options.sept_tset), target, order);
            std::string variant = "pairing=as-printed";
            if (options.sept_tset == SeptTSet::printed) {
                variant += ";t-set=printed";
            }
            variant += ";swapped:" + mismatch_note(swapped);
            report = make_exact_report(name, used, order, printed, variant);
            break;
        }
        case IdentityId::LEM_SEPT_14:
        case IdentityId::LEM_SEPT_23: {
            const SeptVariant v =
                id == IdentityId::LEM_SEPT_14 ? SeptVariant::v14 : SeptVariant::v23;
            const Exponent n = get("n");
            const Exponent work = std::max(order, n);
            report = make_claimed_report(
                name, used, work, n,
                compare(lem_sept_partial(v, n, work), lem_sept_target(v, work), work),
                v == SeptVariant::v14 ? "target=1/(R23*F5)" : "target=1/(R14*F5)");
            break;
        }
        case IdentityId::COR_SEPT_14:
        case IdentityId::COR_SEPT_23: {
            const SeptVariant v =
                id == IdentityId::COR_SEPT_14 ? SeptVariant::v14 : SeptVariant::v23;
            const Exponent n = get("n");
            report = make_exact_report(
                name, used, n,
                compare_coefficients(cor_sept_coefficients(v, n, n), lem_sept_target(v, n)),
                v == SeptVariant::v14 ? "target=1/(R23*F5)" : "target=1/(R14*F5)");
            break;
        }
        case IdentityId::JTP1:
        case IdentityId::JTP2: {
            const int part = id == IdentityId::JTP1 ? 1 : 2;
            const Exponent param = get(part == 1 ? "beta" : "gamma");
            const Series rhs =
                thm_jtp_rhs(part, get("k"), param, order, options.jtp, options.d_reading);
            std::string variant = options.jtp == JtpVariant::printed     ? "form=printed"
                                  : options.jtp == JtpVariant::prefactor ? "form=prefactor"
                                                                         : "form=derived";
            if (part == 2 && options.d_reading == Reading::printed) {
                variant += ";D=printed";
            }
            report = make_exact_report(name, used, order,
                                       compare(rhs, jtp_target(part, param, order), order), variant);
            break;
        }
        case IdentityId::THM16: {
            const Exponent ell = get("l");
            const Exponent n = get("n");
            const Exponent j = get("j");
            check_thm16(ell, n, j);
            const Series rhs = thm16_rhs(ell, n, j, order, options.agen_reading);
            std::string variant =
                options.agen_reading == Reading::adjudicated ? "parts=all" : "parts=largest";
            Series lhs;
            if (2 * ell == n) {
                // A_{l,2l,k}(q) = C_k(q^l): compare with the OS2 product at q^l
                lhs = reciprocal_product(
                    {{pochhammer(2 * ell, 2 * ell, order), 1}, {pochhammer(ell, 2 * ell, order), 2}},
                    order);
                variant += ";l=n/2 via OS2";
            } else {
                lhs = thm16_lhs(ell, n, j, order);
            }
            report = make_exact_report(name, used, order, compare(rhs, lhs, order), variant);
            break;
        }
        case IdentityId::QUINTUPLE:
            report = verify_quintuple(std::max<Exponent>(order, 1));
            break;
        case IdentityId::SEPTUPLE:
            report = verify_septuple(std::max<Exponent>(order, 1));
            break;
        case IdentityId::JTP_ODD:
            report = verify_jtp(std::max<Exponent>(order, 1), JtpForm::odd);
            break;
        case IdentityId::JTP_EVEN:
            report = verify_jtp(std::max<Exponent>(order, 1), JtpForm::even);
            break;
    }
    report.millis = clock.millis();
    return report;
}

}  // namespace qseries
