#include "qseries/series.hpp"

#include <algorithm>
#include <sstream>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

constexpr std::size_t kNewtonThreshold = 128;

// Inverse of a relative power series u (u[0] = +-1) to `len` coefficients by
// the coefficient recurrence g_n = -u_0 * sum_{i=1..n} u_i g_{n-i}.
std::vector<Integer> invert_recurrence(std::span<const Integer> u, std::size_t len) {
    std::vector<Integer> g(len);
    const Integer& u0 = u[0];
    g[0] = u0;
    Integer acc;
    for (std::size_t n = 1; n < len; ++n) {
        acc = 0;
        const std::size_t imax = std::min(n, u.size() - 1);
        for (std::size_t i = 1; i <= imax; ++i) {
            mpz_addmul(acc.get_mpz_t(), u[i].get_mpz_t(), g[n - i].get_mpz_t());
        }
        g[n] = u0 > 0 ? Integer(-acc) : acc;
    }
    return g;
}

// Newton iteration g <- g + g (1 - u g), doubling the precision each step.
std::vector<Integer> invert_newton(std::span<const Integer> u, std::size_t len,
                                   MulAlgorithm algorithm) {
    std::vector<Integer> g = invert_recurrence(u, std::min(len, kNewtonThreshold));
    while (g.size() < len) {
        const std::size_t next = std::min(len, 2 * g.size());
        const auto ug = detail::convolve(u.first(std::min(u.size(), next)), g, next, algorithm);
        std::vector<Integer> defect(next);
        for (std::size_t i = 1; i < next; ++i) {
            defect[i] = -ug[i];
        }
        const auto correction = detail::convolve(g, defect, next, algorithm);
        g.resize(next);
        for (std::size_t i = 0; i < next; ++i) {
            g[i] += correction[i];
        }
    }
    return g;
}

}  // namespace

Series Series::zero(Exponent order) {
    Series s;
    s.order_ = order;
    return s;
}

Series Series::monomial(const Integer& c, Exponent exponent, Exponent order) {
    if (c == 0 || exponent > order) {
        return zero(order);
    }
    return from_coefficients(exponent, {c}, order);
}

Series Series::from_coefficients(Exponent valuation, std::vector<Integer> coeffs, Exponent order) {
    Series s;
    s.valuation_ = valuation;
    s.order_ = order;
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
}

void Series::normalize() {
    const auto lead = std::find_if(coeffs_.begin(), coeffs_.end(),
                                   [](const Integer& c) { return c != 0; });
    const auto skipped = static_cast<Exponent>(lead - coeffs_.begin());
    if (lead == coeffs_.end() || valuation_ + skipped > order_) {
        coeffs_.clear();
        valuation_ = 0;
        return;
    }
    coeffs_.erase(coeffs_.begin(), lead);
    valuation_ += skipped;
    coeffs_.resize(static_cast<std::size_t>(order_ - valuation_ + 1));
}

Integer Series::coeff(Exponent e) const {
    if (e > order_) {
        throw OutOfRangeError("coefficient of q^" + std::to_string(e) +
                              " requested beyond truncation order " + std::to_string(order_));
    }
    if (is_zero() || e < valuation_) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(e - valuation_)];
}

Series Series::truncate(Exponent order) const {
    if (order > order_) {
        throw OutOfRangeError("cannot raise truncation order from " + std::to_string(order_) +
                              " to " + std::to_string(order));
    }
    if (is_zero() || order < valuation_) {
        return zero(order);
    }
    std::vector<Integer> c(coeffs_.begin(),
                           coeffs_.begin() + static_cast<std::ptrdiff_t>(order - valuation_ + 1));
    return from_coefficients(valuation_, std::move(c), order);
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Series& Series::operator+=(const Series& rhs) {
    const Exponent order = std::min(order_, rhs.order_);
    if (rhs.is_zero() || rhs.valuation_ > order) {
        *this = truncate(order);
        return *this;
    }
    if (is_zero() || valuation_ > order) {
        *this = rhs.truncate(order);
        return *this;
    }
    const Exponent low = std::min(valuation_, rhs.valuation_);
    std::vector<Integer> sum(static_cast<std::size_t>(order - low + 1));
    for (Exponent e = valuation_; e <= order; ++e) {
        sum[static_cast<std::size_t>(e - low)] = coeffs_[static_cast<std::size_t>(e - valuation_)];
    }
    for (Exponent e = rhs.valuation_; e <= order; ++e) {
        sum[static_cast<std::size_t>(e - low)] += rhs.coeffs_[static_cast<std::size_t>(e - rhs.valuation_)];
    }
    *this = from_coefficients(low, std::move(sum), order);
    return *this;
}

Series& Series::operator-=(const Series& rhs) { return *this += -rhs; }

Series& Series::operator*=(const Integer& c) {
    if (c == 0) {
        *this = zero(order_);
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

Series operator*(const Series& lhs, const Series& rhs) { return mul(lhs, rhs); }

bool operator==(const Series& lhs, const Series& rhs) {
    return lhs.order_ == rhs.order_ && lhs.valuation() == rhs.valuation() &&
           lhs.coeffs_ == rhs.coeffs_;
}

std::string Series::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        const Exponent e = valuation_ + static_cast<Exponent>(i);
        if (!first) {
            os << (c > 0 ? " + " : " - ");
        } else if (c < 0) {
            os << "-";
        }
        const Integer a = abs(c);
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) {
                os << a << "*";
            }
            os << "q";
            if (e != 1) {
                os << "^" << e;
            }
        }
        first = false;
    }
    if (first) {
        os << "0";
    }
    os << " + O(q^" << order_ + 1 << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Series& f) { return os << f.to_string(); }

Series add(const Series& f, const Series& g) { return f + g; }

Series mul(const Series& f, const Series& g, MulAlgorithm algorithm) {
    const Exponent order = std::min(f.order() + g.valuation(), g.order() + f.valuation());
    if (f.is_zero() || g.is_zero()) {
        return Series::zero(order);
    }
    const Exponent valuation = f.valuation() + g.valuation();
    if (valuation > order) {
        return Series::zero(order);
    }
    const auto keep = static_cast<std::size_t>(order - valuation + 1);
    return Series::from_coefficients(
        valuation, detail::convolve(f.coefficients(), g.coefficients(), keep, algorithm), order);
}

Series invert(const Series& f, MulAlgorithm algorithm) {
    if (f.is_zero()) {
        throw NotInvertibleError("cannot invert the zero series");
    }
    const Integer& lead = f.coefficients().front();
    if (lead != 1 && lead != -1) {
        throw NotInvertibleError("leading coefficient " + to_string(lead) +
                                 " is not a unit over the integers");
    }
    const Exponent v = f.valuation();
    const std::size_t len = f.coefficients().size();
    std::vector<Integer> g = len < kNewtonThreshold || algorithm == MulAlgorithm::schoolbook
                                 ? invert_recurrence(f.coefficients(), len)
                                 : invert_newton(f.coefficients(), len, algorithm);
    return Series::from_coefficients(-v, std::move(g), f.order() - 2 * v);
}

Series shift(const Series& f, Exponent m) {
    if (f.is_zero()) {
        return Series::zero(f.order() + m);
    }
    std::vector<Integer> c(f.coefficients().begin(), f.coefficients().end());
    return Series::from_coefficients(f.valuation() + m, std::move(c), f.order() + m);
}

Series pow(const Series& f, Exponent k) {
    if (k < 0) {
        return pow(invert(f), -k);
    }
    Series result = Series::one(f.order());
    Series base = f;
    while (k > 0) {
        if (k & 1) {
            result = result * base;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

Integer coeff(const Series& f, Exponent m) { return f.coeff(m); }

std::optional<Exponent> first_mismatch(const Series& f, const Series& g, Exponent up_to) {
    if (up_to > f.order() || up_to > g.order()) {
        throw OutOfRangeError("comparison bound " + std::to_string(up_to) +
                              " exceeds a truncation order (" + std::to_string(f.order()) + ", " +
                              std::to_string(g.order()) + ")");
    }
    const Exponent low = std::min(f.valuation(), g.valuation());
    for (Exponent e = low; e <= up_to; ++e) {
        if (f.coeff(e) != g.coeff(e)) {
            return e;
        }
    }
    return std::nullopt;
}

}  // namespace qseries
