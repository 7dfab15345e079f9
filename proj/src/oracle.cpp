#include "qseries/oracle.hpp"

#include <string>
#include <vector>

#include "qseries/errors.hpp"

namespace qseries::oracle {

namespace {

void check_cap(bool ok, const std::string& what) {
    if (!ok) {
        throw CapExceededError(what + " exceeds the enumeration cap");
    }
}

void check_nonnegative(Exponent v, const char* name) {
    if (v < 0) {
        throw DomainError(std::string(name) + " must be >= 0");
    }
}

// Parts t >= from (with the given step), k of them strictly increasing,
// multiplicities m >= 1, accumulating prod m while sum m t stays <= n.
Integer weighted_parts(Exponent k, Exponent n, Exponent from, Exponent step) {
    if (k == 0) {
        return n == 0 ? 1 : 0;
    }
    Integer total = 0;
    for (Exponent t = from; t <= n; t += step) {
        for (Exponent m = 1; m * t <= n; ++m) {
            total += m * weighted_parts(k - 1, n - m * t, t + step, step);
        }
    }
    return total;
}

// Visits every partition of n into parts <= largest, counting leaves.
std::int64_t count_partitions(Exponent n, Exponent largest) {
    if (n == 0) {
        return 1;
    }
    std::int64_t c = 0;
    for (Exponent p = std::min(n, largest); p >= 1; --p) {
        c += count_partitions(n - p, p);
    }
    return c;
}

// Sum of 2^(number of distinct part sizes) over partitions of n into parts
// <= largest, each part size chosen once with its multiplicity.
Integer overpartitions(Exponent n, Exponent largest) {
    if (n == 0) {
        return 1;
    }
    Integer c = 0;
    for (Exponent p = std::min(n, largest); p >= 1; --p) {
        for (Exponent mult = 1; mult * p <= n; ++mult) {
            c += 2 * overpartitions(n - mult * p, p - 1);
        }
    }
    return c;
}

// One admissible part of a nested sum: q^numerator / (1 - q^part)^2.
struct Term {
    Exponent part;
    Exponent numerator;
    bool closes;  // may serve as the last (largest) part
};

std::vector<Term> literal_terms(const FamilySpec& spec, Exponent order) {
    std::vector<Term> terms;
    const Exponent g = spec.first;
    for (Exponent i = 0; i <= 2 * order + 2 * g + 2; ++i) {
        Term t{0, 0, true};
        switch (spec.kind) {
            case FamilyKind::A:
                t = {i + 1, i + 1, true};
                break;
            case FamilyKind::C:
                t = {2 * i + 1, 2 * i + 1, true};
                break;
            case FamilyKind::B:
                t = {i + 1 + 2 * g, i + 1 + 2 * g, true};
                break;
            case FamilyKind::D:
                if (spec.reading == Reading::printed) {
                    // m >= 1, part 2m + gamma + 1, numerator m + gamma + 1
                    t = {2 * (i + 1) + g + 1, (i + 1) + g + 1, true};
                } else {
                    t = {2 * i + g + 1, 2 * i + g + 1, true};
                }
                break;
            case FamilyKind::AGEN: {
                const Exponent n = spec.second;
                const Exponent p = i + 1;
                const Exponent r = ((p % n) + n) % n;
                const Exponent l = ((g % n) + n) % n;
                const bool in_class = r == l || r == (n - l) % n;
                if (spec.reading == Reading::printed) {
                    t = {p, p, in_class};
                } else if (in_class) {
                    t = {p, p, true};
                } else {
                    continue;
                }
                break;
            }
        }
        if (t.numerator > order) {
            break;
        }
        terms.push_back(t);
    }
    return terms;
}

void expand_nested(const std::vector<Term>& terms, std::size_t from, Exponent k, Exponent exponent,
                   const Integer& weight, Exponent order, std::vector<Integer>& out) {
    if (k == 0) {
        out[static_cast<std::size_t>(exponent)] += weight;
        return;
    }
    for (std::size_t i = from; i < terms.size(); ++i) {
        const Term& t = terms[i];
        if (k == 1 && !t.closes) {
            continue;
        }
        // q^numerator / (1 - q^part)^2 = sum_{m >= 1} m q^(numerator + (m - 1) part)
        for (Exponent m = 1; exponent + t.numerator + (m - 1) * t.part <= order; ++m) {
            expand_nested(terms, i + 1, k - 1, exponent + t.numerator + (m - 1) * t.part,
                          weight * m, order, out);
        }
    }
}

}  // namespace

Integer m_oracle(Exponent k, Exponent n) {
    check_nonnegative(k, "k");
    check_nonnegative(n, "n");
    check_cap(k <= kMaxMK && n <= kMaxMN, "m(k;n)");
    return weighted_parts(k, n, 1, 1);
}

Integer modd_oracle(Exponent k, Exponent n) {
    check_nonnegative(k, "k");
    check_nonnegative(n, "n");
    check_cap(k <= kMaxMK && n <= kMaxMN, "m_odd(k;n)");
    return weighted_parts(k, n, 1, 2);
}

Integer p3_oracle(Exponent n) {
    check_nonnegative(n, "n");
    check_cap(n <= kMaxPartitionN, "p3(n)");
    std::vector<Integer> p(static_cast<std::size_t>(n + 1));
    for (Exponent i = 0; i <= n; ++i) {
        p[static_cast<std::size_t>(i)] = count_partitions(i, i);
    }
    Integer total = 0;
    for (Exponent a = 0; a <= n; ++a) {
        for (Exponent b = 0; a + b <= n; ++b) {
            total += p[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(b)] *
                     p[static_cast<std::size_t>(n - a - b)];
        }
    }
    return total;
}

Integer overp_oracle(Exponent n) {
    check_nonnegative(n, "n");
    check_cap(n <= kMaxPartitionN, "overpartitions(n)");
    return overpartitions(n, n);
}

Integer p_pair_oracle(Exponent k, Exponent n, Exponent m) {
    check_nonnegative(k, "k");
    check_cap(k <= kMaxPairK, "P([k],n,m)");
    const unsigned subsets = 1u << k;
    Integer count = 0;
    for (unsigned lam = 0; lam < subsets; ++lam) {
        for (unsigned mu = 0; mu < subsets; ++mu) {
            Exponent size = 0;
            Exponent diff = 0;
            for (Exponent j = 1; j <= k; ++j) {
                if (lam >> (j - 1) & 1u) {
                    size += j;
                    ++diff;
                }
                if (mu >> (j - 1) & 1u) {
                    size += j;
                    --diff;
                }
            }
            if (size == n && diff == m) {
                ++count;
            }
        }
    }
    return count;
}

Series nested_family_oracle(const FamilySpec& spec, Exponent k, Exponent order) {
    spec.validate();
    check_nonnegative(k, "k");
    check_nonnegative(order, "order");
    check_cap(k <= kMaxNestedK && order <= kMaxNestedN, "nested family sum");
    std::vector<Integer> coeffs(static_cast<std::size_t>(order + 1));
    expand_nested(literal_terms(spec, order), 0, k, 0, 1, order, coeffs);
    return Series::from_coefficients(0, std::move(coeffs), order);
}

}  // namespace qseries::oracle
