#pragma once

#include <map>
#include <optional>
#include <utility>

#include "qseries/series.hpp"

namespace qseries {

/// Laurent polynomial in z whose coefficients are truncated q-series sharing
/// one truncation order. Only nonzero slices are stored.
class ZSeries {
public:
    explicit ZSeries(Exponent order = 0) : order_(order) {}

    /// c * z^zexp * q^qexp.
    static ZSeries monomial(const Integer& c, Exponent zexp, Exponent qexp, Exponent order);

    /// 1 + c * z^zexp * q^qexp, the building block of every product side.
    static ZSeries binomial_factor(const Integer& c, Exponent zexp, Exponent qexp, Exponent order);

    Exponent order() const noexcept { return order_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Exponent, Series>& terms() const noexcept { return terms_; }

    /// Coefficient of z^j (the zero series when j is outside the support).
    Series zcoeff(Exponent j) const;

    /// Adds s * z^j. The common order becomes min(order(), s.order()).
    void add_term(Exponent j, const Series& s);

    /// In-place multiplication by (1 + c z^zexp q^qexp); linear in the size.
    ZSeries& multiply_binomial(const Integer& c, Exponent zexp, Exponent qexp);

    ZSeries& operator+=(const ZSeries& rhs);
    friend ZSeries operator+(ZSeries lhs, const ZSeries& rhs) { return lhs += rhs; }
    friend ZSeries operator*(const ZSeries& lhs, const ZSeries& rhs);
    friend ZSeries operator*(const ZSeries& lhs, const Series& rhs);
    friend bool operator==(const ZSeries& lhs, const ZSeries& rhs) = default;

private:
    void truncate_all(Exponent order);

    Exponent order_;
    std::map<Exponent, Series> terms_;
};

ZSeries zmul(const ZSeries& f, const ZSeries& g);
Series zcoeff(const ZSeries& f, Exponent j);

/// First disagreement of two bivariate series over all z-slices, as
/// (q-exponent, z-exponent) with the smallest q-exponent, ties broken by z.
std::optional<std::pair<Exponent, Exponent>> first_mismatch(const ZSeries& f, const ZSeries& g,
                                                            Exponent up_to);

}  // namespace qseries
