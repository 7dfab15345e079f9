#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "qseries/series.hpp"

namespace testing {

using qseries::Exponent;
using qseries::Integer;
using qseries::Series;

inline Series poly(std::initializer_list<long> c, Exponent order, Exponent valuation = 0) {
    std::vector<Integer> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return Series::from_coefficients(valuation, std::move(v), order);
}

/// Coefficients of q^from .. q^to.
inline std::vector<Integer> coeffs(const Series& f, Exponent from, Exponent to) {
    std::vector<Integer> out;
    for (Exponent e = from; e <= to; ++e) {
        out.push_back(f.coeff(e));
    }
    return out;
}

inline std::vector<Integer> ints(std::initializer_list<long> c) {
    return std::vector<Integer>(c.begin(), c.end());
}

inline Integer random_integer(std::mt19937_64& rng, unsigned max_bits) {
    std::uniform_int_distribution<unsigned> bits(1, max_bits);
    const unsigned b = bits(rng);
    Integer x = 0;
    for (unsigned done = 0; done < b; done += 32) {
        x <<= 32;
        x += static_cast<unsigned long>(rng() & 0xffffffffu);
    }
    x >>= (b + 31) / 32 * 32 - b;
    return rng() & 1 ? Integer(-x) : x;
}

/// Random series with the given valuation and order; about a third of the
/// coefficients are zero. A nonzero leading coefficient is forced.
inline Series random_series(std::mt19937_64& rng, Exponent valuation, Exponent order,
                            unsigned max_bits = 20) {
    std::vector<Integer> c(static_cast<std::size_t>(order - valuation + 1));
    for (auto& x : c) {
        x = rng() % 3 == 0 ? Integer(0) : random_integer(rng, max_bits);
    }
    if (!c.empty() && c[0] == 0) {
        c[0] = 1;
    }
    return Series::from_coefficients(valuation, std::move(c), order);
}

/// Random series with leading coefficient +1 or -1.
inline Series random_unit(std::mt19937_64& rng, Exponent valuation, Exponent order,
                          unsigned max_bits = 20) {
    Series f = random_series(rng, valuation, order, max_bits);
    std::vector<Integer> c(f.coefficients().begin(), f.coefficients().end());
    c[0] = rng() & 1 ? 1 : -1;
    return Series::from_coefficients(valuation, std::move(c), order);
}

}  // namespace testing
