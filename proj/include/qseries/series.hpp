#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qseries/integer.hpp"

namespace qseries {

/// Selects the convolution kernel used by `mul`.
///
/// `schoolbook` is the reference path. `kronecker` packs both operands into
/// single big integers and lets GMP multiply them; results are bit-identical.
/// `automatic` picks `kronecker` once both operands are long enough.
enum class MulAlgorithm { automatic, schoolbook, kronecker };

/// Truncated Laurent series in q with exact integer coefficients.
///
/// A value stores the coefficients of q^valuation .. q^order densely and
/// knows nothing about exponents above `order`. The zero series is the empty
/// coefficient vector; it still carries an order (it is zero *up to* that
/// order). Every constructor normalizes, so a nonzero series always has a
/// nonzero coefficient at its valuation.
class Series {
public:
    /// Zero series known up to order 0.
    Series() = default;

    static Series zero(Exponent order);
    static Series one(Exponent order) { return monomial(1, 0, order); }
    static Series monomial(const Integer& c, Exponent exponent, Exponent order);

    /// Coefficients of q^valuation, q^(valuation+1), ...; entries above
    /// `order` are dropped and missing entries up to `order` are zero.
    static Series from_coefficients(Exponent valuation, std::vector<Integer> coeffs,
                                    Exponent order);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    Exponent order() const noexcept { return order_; }

    /// Smallest exponent with a nonzero coefficient; `order() + 1` for zero.
    Exponent valuation() const noexcept { return is_zero() ? order_ + 1 : valuation_; }

    /// Dense coefficients for exponents valuation()..order().
    std::span<const Integer> coefficients() const noexcept { return coeffs_; }

    /// Exact coefficient of q^e. Throws OutOfRangeError when e > order().
    Integer coeff(Exponent e) const;

    /// Same series known only up to `order` (order must not exceed the current one).
    Series truncate(Exponent order) const;

    Series operator-() const;
    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Integer& c);

    friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
    friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
    friend Series operator*(Series lhs, const Integer& c) { return lhs *= c; }
    friend Series operator*(const Integer& c, Series rhs) { return rhs *= c; }
    friend Series operator*(const Series& lhs, const Series& rhs);

    /// Structural equality: same order and same coefficients.
    friend bool operator==(const Series& lhs, const Series& rhs);

    std::string to_string() const;

private:
    void normalize();

    Exponent valuation_ = 0;
    Exponent order_ = 0;
    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Series& f);

Series add(const Series& f, const Series& g);

/// Product keeping only fully determined coefficients:
/// order = min(f.order + g.valuation, g.order + f.valuation).
Series mul(const Series& f, const Series& g, MulAlgorithm algorithm = MulAlgorithm::automatic);

/// Multiplicative inverse over the integers. The leading coefficient must be
/// +1 or -1; the result has valuation -f.valuation and order
/// f.order - 2 f.valuation.
Series invert(const Series& f, MulAlgorithm algorithm = MulAlgorithm::automatic);

/// Multiplication by q^m.
Series shift(const Series& f, Exponent m);

/// f^k for k >= 0, invert(f)^|k| for k < 0.
Series pow(const Series& f, Exponent k);

Integer coeff(const Series& f, Exponent m);

/// Smallest exponent <= up_to at which f and g differ, if any.
/// Throws OutOfRangeError when up_to exceeds either order.
std::optional<Exponent> first_mismatch(const Series& f, const Series& g, Exponent up_to);

namespace detail {

/// Short product: the first `keep` coefficients of a * b.
std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b,
                              std::size_t keep, MulAlgorithm algorithm);

std::vector<Integer> convolve_schoolbook(std::span<const Integer> a, std::span<const Integer> b,
                                         std::size_t keep);

std::vector<Integer> convolve_kronecker(std::span<const Integer> a, std::span<const Integer> b,
                                        std::size_t keep);

}  // namespace detail

}  // namespace qseries
