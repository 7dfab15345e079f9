#pragma once

#include <string>
#include <vector>

#include "qseries/series.hpp"
#include "qseries/zseries.hpp"

namespace qseries {

enum class FamilyKind { A, C, B, D, AGEN };

/// How the printed definitions of the D and A_{l,n} families are read.
enum class Reading {
    adjudicated,  ///< D: parts gamma+1, gamma+3, ... with numerator q^p; AGEN: every part in the class
    printed,      ///< D: parts 2m+gamma+1 (m>=1) with numerator q^(m+gamma+1); AGEN: only the largest part
};

/// A MacMahon-type family: sum over k distinct part sizes p_1 < ... < p_k
/// from a set S of prod q^(w(p_i)) / (1 - q^(p_i))^2.
struct FamilySpec {
    FamilyKind kind = FamilyKind::A;
    Exponent first = 0;   ///< beta for B, gamma for D, l for AGEN
    Exponent second = 0;  ///< n for AGEN
    Reading reading = Reading::adjudicated;

    static FamilySpec a() { return {FamilyKind::A}; }
    static FamilySpec c() { return {FamilyKind::C}; }
    static FamilySpec b(Exponent beta) { return {FamilyKind::B, beta}; }
    static FamilySpec d(Exponent gamma, Reading r = Reading::adjudicated) {
        return {FamilyKind::D, gamma, 0, r};
    }
    static FamilySpec agen(Exponent ell, Exponent n, Reading r = Reading::adjudicated) {
        return {FamilyKind::AGEN, ell, n, r};
    }

    /// Throws DomainError for negative beta/gamma or an empty AGEN class.
    void validate() const;

    /// Whether p belongs to the part set S (for printed AGEN: the set the
    /// largest part is drawn from).
    bool contains(Exponent p) const;

    /// Numerator exponent contributed by part p.
    Exponent weight(Exponent p) const;

    /// Lower bound for the valuation of the k-th slice: the sum of the k
    /// smallest weights (for printed AGEN, over all positive integers).
    Exponent valuation_bound(Exponent k) const;

    /// Largest k with valuation_bound(k) <= order.
    Exponent max_slice(Exponent order) const;

    std::string to_string() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Polynomial in x^2 with series coefficients: slices[k] is the x^(2k) coefficient.
struct XPoly {
    std::vector<Series> slices;
};

/// prod_{p in S} (1 + x^2 q^w(p)/(1 - q^p)^2) expanded to x^(2 kmax), every
/// slice to q-order N.
XPoly family_gen(const FamilySpec& spec, Exponent kmax, Exponent order);

/// As family_gen, but slice k is kept only up to valuation_bound(k) + width.
/// Exact because slice k-1 feeds slice k only through parts of weight at
/// least valuation_bound(k) - valuation_bound(k-1).
XPoly family_gen_window(const FamilySpec& spec, Exponent kmax, Exponent width);

/// The x^(2k) slice: A_k, C_k, B_{k,beta}, D_{k,gamma} or A_{l,n,k}.
Series family_series(const FamilySpec& spec, Exponent k, Exponent order);

/// prod_{j=1}^k (1 + z q^j)(1 + z^-1 q^j); the coefficient of q^n z^m is
/// P([k], n, m). Stored to q-order max(order, k(k+1)); the polynomial is exact.
ZSeries p_polynomial(Exponent k, Exponent order = -1);

}  // namespace qseries
