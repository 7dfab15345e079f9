#include <algorithm>
#include <bit>

#include "qseries/series.hpp"

namespace qseries::detail {

namespace {

constexpr std::size_t kKroneckerThreshold = 48;
constexpr std::size_t kLimbBits = sizeof(mp_limb_t) * 8;

struct SignSplit {
    std::vector<Integer> positive;
    std::vector<Integer> negative;
    bool has_positive = false;
    bool has_negative = false;
};

SignSplit split_signs(std::span<const Integer> v) {
    SignSplit s;
    s.positive.resize(v.size());
    s.negative.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const int sg = sgn(v[i]);
        if (sg > 0) {
            s.positive[i] = v[i];
            s.has_positive = true;
        } else if (sg < 0) {
            s.negative[i] = -v[i];
            s.has_negative = true;
        }
    }
    return s;
}

std::size_t max_bits(std::span<const Integer> v) {
    std::size_t b = 0;
    for (const auto& x : v) {
        b = std::max(b, bit_length(x));
    }
    return b;
}

Integer pack(std::span<const Integer> v, std::size_t slot_limbs) {
    std::vector<mp_limb_t> buf(v.size() * slot_limbs, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            std::size_t count = 0;
            mpz_export(buf.data() + i * slot_limbs, &count, -1, sizeof(mp_limb_t), 0, 0,
                       v[i].get_mpz_t());
        }
    }
    Integer packed;
    mpz_import(packed.get_mpz_t(), buf.size(), -1, sizeof(mp_limb_t), 0, 0, buf.data());
    return packed;
}

// Adds sign * (a * b) into out[0..keep) for nonnegative a, b.
void accumulate_product(std::span<const Integer> a, std::span<const Integer> b, std::size_t keep,
                        int sign, std::vector<Integer>& out) {
    const std::size_t terms = std::min(a.size(), b.size());
    const std::size_t bits = max_bits(a) + max_bits(b) + std::bit_width(terms) + 1;
    const std::size_t slot_limbs = (bits + kLimbBits - 1) / kLimbBits;

    const Integer product = pack(a, slot_limbs) * pack(b, slot_limbs);

    std::vector<mp_limb_t> limbs(std::max(mpz_size(product.get_mpz_t()), keep * slot_limbs), 0);
    std::size_t count = 0;
    mpz_export(limbs.data(), &count, -1, sizeof(mp_limb_t), 0, 0, product.get_mpz_t());

    Integer c;
    for (std::size_t i = 0; i < keep; ++i) {
        mpz_import(c.get_mpz_t(), slot_limbs, -1, sizeof(mp_limb_t), 0, 0,
                   limbs.data() + i * slot_limbs);
        if (sign > 0) {
            out[i] += c;
        } else {
            out[i] -= c;
        }
    }
}

}  // namespace

std::vector<Integer> convolve_schoolbook(std::span<const Integer> a, std::span<const Integer> b,
                                         std::size_t keep) {
    std::vector<Integer> r(keep);
    for (std::size_t i = 0; i < a.size() && i < keep; ++i) {
        if (a[i] == 0) {
            continue;
        }
        const std::size_t jmax = std::min(b.size(), keep - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return r;
}

std::vector<Integer> convolve_kronecker(std::span<const Integer> a, std::span<const Integer> b,
                                        std::size_t keep) {
    a = a.first(std::min(a.size(), keep));
    b = b.first(std::min(b.size(), keep));
    std::vector<Integer> r(keep);
    if (a.empty() || b.empty()) {
        return r;
    }
    const SignSplit sa = split_signs(a);
    const SignSplit sb = split_signs(b);
    if (sa.has_positive && sb.has_positive) {
        accumulate_product(sa.positive, sb.positive, keep, +1, r);
    }
    if (sa.has_negative && sb.has_negative) {
        accumulate_product(sa.negative, sb.negative, keep, +1, r);
    }
    if (sa.has_positive && sb.has_negative) {
        accumulate_product(sa.positive, sb.negative, keep, -1, r);
    }
    if (sa.has_negative && sb.has_positive) {
        accumulate_product(sa.negative, sb.positive, keep, -1, r);
    }
    return r;
}

std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b,
                              std::size_t keep, MulAlgorithm algorithm) {
    switch (algorithm) {
        case MulAlgorithm::schoolbook:
            return convolve_schoolbook(a, b, keep);
        case MulAlgorithm::kronecker:
            return convolve_kronecker(a, b, keep);
        case MulAlgorithm::automatic:
            break;
    }
    const std::size_t shortest = std::min({a.size(), b.size(), keep});
    if (shortest >= kKroneckerThreshold) {
        return convolve_kronecker(a, b, keep);
    }
    return convolve_schoolbook(a, b, keep);
}

}  // namespace qseries::detail
