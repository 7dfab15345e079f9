#include "qseries/zseries.hpp"

#include <algorithm>
#include <set>

namespace qseries {

ZSeries ZSeries::monomial(const Integer& c, Exponent zexp, Exponent qexp, Exponent order) {
    ZSeries r(order);
    r.add_term(zexp, Series::monomial(c, qexp, order));
    return r;
}

ZSeries ZSeries::binomial_factor(const Integer& c, Exponent zexp, Exponent qexp, Exponent order) {
    ZSeries r(order);
    r.add_term(0, Series::one(order));
    r.add_term(zexp, Series::monomial(c, qexp, order));
    return r;
}

Series ZSeries::zcoeff(Exponent j) const {
    const auto it = terms_.find(j);
    return it == terms_.end() ? Series::zero(order_) : it->second;
}

void ZSeries::truncate_all(Exponent order) {
    order_ = order;
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = it->second.truncate(order);
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
}

void ZSeries::add_term(Exponent j, const Series& s) {
    if (s.order() < order_) {
        truncate_all(s.order());
    }
    const auto it = terms_.find(j);
    Series sum = it == terms_.end() ? s.truncate(order_) : it->second + s;
    if (sum.is_zero()) {
        if (it != terms_.end()) {
            terms_.erase(it);
        }
    } else {
        terms_.insert_or_assign(j, std::move(sum));
    }
}

ZSeries& ZSeries::multiply_binomial(const Integer& c, Exponent zexp, Exponent qexp) {
    ZSeries moved(order_);
    for (const auto& [j, s] : terms_) {
        Series t = shift(s, qexp) * c;
        moved.add_term(j + zexp, qexp > 0 ? t.truncate(order_) : t);
    }
    *this += moved;
    return *this;
}

ZSeries& ZSeries::operator+=(const ZSeries& rhs) {
    if (rhs.order_ < order_) {
        truncate_all(rhs.order_);
    }
    for (const auto& [j, s] : rhs.terms_) {
        add_term(j, s);
    }
    return *this;
}

ZSeries operator*(const ZSeries& lhs, const ZSeries& rhs) {
    ZSeries r(std::min(lhs.order_, rhs.order_));
    for (const auto& [i, f] : lhs.terms_) {
        for (const auto& [j, g] : rhs.terms_) {
            Series p = f * g;
            // Slices with positive valuation raise the product's order; keep
            // the common order so slices stay comparable.
            r.add_term(i + j, p.order() > r.order_ ? p.truncate(r.order_) : p);
        }
    }
    return r;
}

ZSeries operator*(const ZSeries& lhs, const Series& rhs) {
    ZSeries r(std::min(lhs.order_, rhs.order()));
    for (const auto& [i, f] : lhs.terms_) {
        Series p = f * rhs;
        r.add_term(i, p.order() > r.order_ ? p.truncate(r.order_) : p);
    }
    return r;
}

ZSeries zmul(const ZSeries& f, const ZSeries& g) { return f * g; }

Series zcoeff(const ZSeries& f, Exponent j) { return f.zcoeff(j); }

std::optional<std::pair<Exponent, Exponent>> first_mismatch(const ZSeries& f, const ZSeries& g,
                                                            Exponent up_to) {
    std::set<Exponent> support;
    for (const auto& [j, s] : f.terms()) {
        support.insert(j);
    }
    for (const auto& [j, s] : g.terms()) {
        support.insert(j);
    }
    std::optional<std::pair<Exponent, Exponent>> best;
    for (const Exponent j : support) {
        const auto m = first_mismatch(f.zcoeff(j), g.zcoeff(j), up_to);
        if (m && (!best || *m < best->first)) {
            best = std::pair{*m, j};
        }
    }
    return best;
}

}  // namespace qseries
