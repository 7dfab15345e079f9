#include "qseries/macmahon.hpp"

#include <algorithm>
#include <sstream>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

Exponent positive_mod(Exponent a, Exponent n) { return ((a % n) + n) % n; }

// Dense coefficients for exponents low..high of one x^(2k) slice.
struct Slice {
    Exponent low = 0;
    Exponent high = -1;
    std::vector<Integer> c;

    Slice(Exponent lo, Exponent hi) : low(lo), high(hi) {
        c.resize(static_cast<std::size_t>(std::max<Exponent>(hi - lo + 1, 0)));
    }

    Series to_series() && { return Series::from_coefficients(low, std::move(c), high); }
};

// dst += q^w / (1 - q^p)^2 * src, restricted to dst's window.
void accumulate(Slice& dst, const Slice& src, Exponent p, Exponent w,
                std::vector<Integer>& scratch) {
    const Exponent hi = std::min(dst.high - w, src.high);
    const Exponent lo = std::max(src.low, dst.low - w);
    if (hi < lo) {
        return;
    }
    const auto len = static_cast<std::size_t>(hi - src.low + 1);
    // Prefix sums must start at src.low so the division by (1 - q^p)^2 is exact.
    if (scratch.size() < len) {
        scratch.resize(len);
    }
    for (std::size_t i = 0; i < len; ++i) {
        scratch[i] = src.c[i];
    }
    const auto step = static_cast<std::size_t>(p);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = step; i < len; ++i) {
            scratch[i] += scratch[i - step];
        }
    }
    for (Exponent e = lo; e <= hi; ++e) {
        dst.c[static_cast<std::size_t>(e + w - dst.low)] += scratch[static_cast<std::size_t>(e - src.low)];
    }
}

XPoly generate(const FamilySpec& spec, Exponent kmax, const std::vector<Exponent>& highs) {
    std::vector<Exponent> lows(static_cast<std::size_t>(kmax + 1));
    for (Exponent k = 0; k <= kmax; ++k) {
        lows[static_cast<std::size_t>(k)] = spec.valuation_bound(k);
    }
    std::vector<Slice> slices;
    slices.reserve(lows.size());
    for (std::size_t k = 0; k < lows.size(); ++k) {
        slices.emplace_back(lows[k], highs[k]);
    }
    if (highs[0] >= 0) {
        slices[0].c[0] = 1;
    }

    // Parts heavier than every window gap cannot contribute any more.
    Exponent limit = -1;
    for (std::size_t k = 1; k < lows.size(); ++k) {
        limit = std::max(limit, highs[k] - lows[k - 1]);
    }

    std::vector<Integer> scratch;
    if (spec.kind == FamilyKind::AGEN && spec.reading == Reading::printed) {
        // unrestricted elementary sums feed the slices whose top part is in the class
        std::vector<Slice> all = slices;
        Exponent count = 0;
        for (Exponent p = 1; p <= limit; ++p) {
            ++count;
            const Exponent top = std::min(kmax, count);
            if (spec.contains(p)) {
                for (Exponent k = top; k >= 1; --k) {
                    accumulate(slices[static_cast<std::size_t>(k)], all[static_cast<std::size_t>(k - 1)], p, p, scratch);
                }
            }
            for (Exponent k = top; k >= 1; --k) {
                accumulate(all[static_cast<std::size_t>(k)], all[static_cast<std::size_t>(k - 1)], p, p, scratch);
            }
        }
    } else {
        Exponent count = 0;
        for (Exponent p = 1;; ++p) {
            if (!spec.contains(p)) {
                continue;
            }
            const Exponent w = spec.weight(p);
            if (w > limit) {
                break;
            }
            ++count;
            for (Exponent k = std::min(kmax, count); k >= 1; --k) {
                accumulate(slices[static_cast<std::size_t>(k)], slices[static_cast<std::size_t>(k - 1)], p, w, scratch);
            }
        }
    }

    XPoly out;
    out.slices.reserve(slices.size());
    for (auto& s : slices) {
        out.slices.push_back(std::move(s).to_series());
    }
    return out;
}

}  // namespace

void FamilySpec::validate() const {
    switch (kind) {
        case FamilyKind::A:
        case FamilyKind::C:
            return;
        case FamilyKind::B:
            if (first < 0) {
                throw DomainError("B family needs beta >= 0");
            }
            return;
        case FamilyKind::D:
            if (first < 0) {
                throw DomainError("D family needs gamma >= 0");
            }
            return;
        case FamilyKind::AGEN:
            if (second < 1 || first < 1) {
                throw DomainError("A_{l,n} family needs n >= 1 and l >= 1");
            }
            return;
    }
}

bool FamilySpec::contains(Exponent p) const {
    if (p < 1) {
        return false;
    }
    switch (kind) {
        case FamilyKind::A:
            return true;
        case FamilyKind::C:
            return p % 2 == 1;
        case FamilyKind::B:
            return p >= 2 * first + 1;
        case FamilyKind::D: {
            const Exponent smallest = reading == Reading::printed ? first + 3 : first + 1;
            return p >= smallest && (p - smallest) % 2 == 0;
        }
        case FamilyKind::AGEN: {
            const Exponent r = positive_mod(p, second);
            return r == positive_mod(first, second) || r == positive_mod(-first, second);
        }
    }
    return false;
}

Exponent FamilySpec::weight(Exponent p) const {
    if (kind == FamilyKind::D && reading == Reading::printed) {
        return (p + first + 1) / 2;
    }
    return p;
}

Exponent FamilySpec::valuation_bound(Exponent k) const {
    if (kind == FamilyKind::AGEN && reading == Reading::printed) {
        return k * (k + 1) / 2;
    }
    Exponent sum = 0;
    Exponent found = 0;
    for (Exponent p = 1; found < k; ++p) {
        if (contains(p)) {
            sum += weight(p);
            ++found;
        }
    }
    return sum;
}

Exponent FamilySpec::max_slice(Exponent order) const {
    Exponent k = 0;
    while (valuation_bound(k + 1) <= order) {
        ++k;
    }
    return k;
}

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case FamilyKind::A:
            os << "A";
            break;
        case FamilyKind::C:
            os << "C";
            break;
        case FamilyKind::B:
            os << "B(beta=" << first << ")";
            break;
        case FamilyKind::D:
            os << "D(gamma=" << first << (reading == Reading::printed ? ",printed" : "") << ")";
            break;
        case FamilyKind::AGEN:
            os << "Agen(l=" << first << ",n=" << second
               << (reading == Reading::printed ? ",largest-part" : "") << ")";
            break;
    }
    return os.str();
}

XPoly family_gen(const FamilySpec& spec, Exponent kmax, Exponent order) {
    spec.validate();
    if (kmax < 0) {
        throw DomainError("kmax must be >= 0");
    }
    return generate(spec, kmax, std::vector<Exponent>(static_cast<std::size_t>(kmax + 1), order));
}

XPoly family_gen_window(const FamilySpec& spec, Exponent kmax, Exponent width) {
    spec.validate();
    if (kmax < 0 || width < 0) {
        throw DomainError("kmax and width must be >= 0");
    }
    if (spec.kind == FamilyKind::AGEN && spec.reading == Reading::printed) {
        throw DomainError("windowed generation is not available for the largest-part reading");
    }
    std::vector<Exponent> highs(static_cast<std::size_t>(kmax + 1));
    for (Exponent k = 0; k <= kmax; ++k) {
        highs[static_cast<std::size_t>(k)] = spec.valuation_bound(k) + width;
    }
    return generate(spec, kmax, highs);
}

Series family_series(const FamilySpec& spec, Exponent k, Exponent order) {
    if (k < 0) {
        throw DomainError("family index k must be >= 0");
    }
    return family_gen(spec, k, order).slices.back();
}

ZSeries p_polynomial(Exponent k, Exponent order) {
    const Exponent exact = std::max<Exponent>(k, 0) * (std::max<Exponent>(k, 0) + 1);
    ZSeries p(std::max(order, exact));
    p.add_term(0, Series::one(p.order()));
    for (Exponent j = 1; j <= k; ++j) {
        p.multiply_binomial(1, 1, j);
        p.multiply_binomial(1, -1, j);
    }
    return p;
}

}  // namespace qseries
