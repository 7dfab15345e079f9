#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qseries {

/// Arbitrary-precision signed integer used for every coefficient.
using Integer = mpz_class;

/// Exponent type for q and z powers.
using Exponent = std::int64_t;

/// binom(n, k) with binom(n, k) = 0 for k < 0 or k > n.
Integer binomial(Exponent n, Exponent k);

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// Number of bits of |x| (0 for x == 0).
inline std::size_t bit_length(const Integer& x) {
    return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

}  // namespace qseries
