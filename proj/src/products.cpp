#include "qseries/products.hpp"

#include <string>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

// Power series 0..order held densely while factors are applied in place.
class DenseSeries {
public:
    explicit DenseSeries(Exponent order) : c_(static_cast<std::size_t>(order + 1)) {
        if (!c_.empty()) {
            c_[0] = 1;
        }
    }

    Exponent order() const { return static_cast<Exponent>(c_.size()) - 1; }

    // *= (1 - s q^e), e >= 1
    void multiply(int s, Exponent e) {
        for (Exponent i = order(); i >= e; --i) {
            if (s > 0) {
                c_[i] -= c_[i - e];
            } else {
                c_[i] += c_[i - e];
            }
        }
    }

    // /= (1 - s q^e), e >= 1
    void divide(int s, Exponent e) {
        for (Exponent i = e; i <= order(); ++i) {
            if (s > 0) {
                c_[i] += c_[i - e];
            } else {
                c_[i] -= c_[i - e];
            }
        }
    }

    void scale(const Integer& k) {
        for (auto& x : c_) {
            x *= k;
        }
    }

    Series take(Exponent offset = 0) {
        const Exponent ord = order();
        return Series::from_coefficients(offset, std::move(c_), ord + offset);
    }

private:
    std::vector<Integer> c_;
};

void validate(const PochhammerFactor& f) {
    if (f.step < 1) {
        throw DomainError("q-Pochhammer step must be >= 1, got " + std::to_string(f.step));
    }
    if (f.start < 0) {
        throw DomainError("q-Pochhammer start must be >= 0, got " + std::to_string(f.start));
    }
    if (f.power < 0 && f.start < 1) {
        throw DomainError("a q-Pochhammer factor with negative power needs start >= 1");
    }
    if (f.sign != 1 && f.sign != -1) {
        throw DomainError("q-Pochhammer sign must be +1 or -1");
    }
}

Exponent pentagonal_like(Exponent a, Exponent b, Exponent n, Exponent denom) {
    return (a * n * n + b * n) / denom;
}

}  // namespace

Series expand(const ProductSpec& spec, Exponent order) {
    for (const auto& f : spec.factors) {
        validate(f);
    }
    if (order < 0) {
        return Series::zero(order);
    }
    DenseSeries acc(order);
    Integer constant = 1;
    for (const auto& f : spec.factors) {
        if (f.power == 0) {
            continue;
        }
        Exponent e = f.start;
        if (e == 0) {
            // (1 - sign): zero for sign = +1, a factor 2 for sign = -1
            if (f.sign > 0) {
                return Series::zero(order);
            }
            Integer two_pow;
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(f.power));
            constant *= two_pow;
            e += f.step;
        }
        for (; e <= order; e += f.step) {
            for (int p = 0; p < std::abs(f.power); ++p) {
                if (f.power > 0) {
                    acc.multiply(f.sign, e);
                } else {
                    acc.divide(f.sign, e);
                }
            }
        }
    }
    if (constant != 1) {
        acc.scale(constant);
    }
    return acc.take();
}

Series pochhammer(Exponent a, Exponent d, Exponent order) {
    return expand(ProductSpec{{PochhammerFactor{a, d, 1, 1}}}, order);
}

Series theta6(Exponent order, ThetaMode mode) {
    if (mode == ThetaMode::product) {
        return expand(ProductSpec{{{1, 1, 1, 3}, {1, 2, 1, 2}}}, order);
    }
    std::vector<Integer> c(static_cast<std::size_t>(std::max<Exponent>(order + 1, 0)));
    for (Exponent n = 1; (n * n - 1) / 24 <= order; ++n) {
        const Exponent r = n % 6;
        if (r != 1 && r != 5) {
            continue;
        }
        const Exponent e = (n * n - 1) / 24;
        c[static_cast<std::size_t>(e)] += r == 1 ? n : -n;
    }
    return Series::from_coefficients(0, std::move(c), order);
}

RogersRamanujanProducts rr_products(Exponent order) {
    return {
        expand(ProductSpec{{{1, 5, 1, -1}, {4, 5, 1, -1}}}, order),
        expand(ProductSpec{{{2, 5, 1, -1}, {3, 5, 1, -1}}}, order),
        expand(ProductSpec{{{1, 1, 1, 6}, {5, 5, 1, -1}}}, order),
    };
}

BivariateSides quintuple_sides(Exponent order) {
    // sum_n q^((3n^2+n)/2) (z^(3n) - z^(-3n-1))
    ZSeries sum(order);
    for (Exponent n = 0; pentagonal_like(3, 1, n, 2) <= order; ++n) {
        const Exponent e = pentagonal_like(3, 1, n, 2);
        sum.add_term(3 * n, Series::monomial(1, e, order));
        sum.add_term(-3 * n - 1, Series::monomial(-1, e, order));
    }
    for (Exponent n = -1; pentagonal_like(3, 1, n, 2) <= order; --n) {
        const Exponent e = pentagonal_like(3, 1, n, 2);
        sum.add_term(3 * n, Series::monomial(1, e, order));
        sum.add_term(-3 * n - 1, Series::monomial(-1, e, order));
    }

    // (q;q) prod_{n>=1} (1 - z q^n)(1 - z^-1 q^(n-1))(1 - z^2 q^(2n-1))(1 - z^-2 q^(2n-1))
    ZSeries product(order);
    product.add_term(0, pochhammer(1, 1, order));
    for (Exponent n = 1; n - 1 <= order; ++n) {
        if (n <= order) {
            product.multiply_binomial(-1, 1, n);
        }
        product.multiply_binomial(-1, -1, n - 1);
        if (2 * n - 1 <= order) {
            product.multiply_binomial(-1, 2, 2 * n - 1);
            product.multiply_binomial(-1, -2, 2 * n - 1);
        }
    }
    return {std::move(sum), std::move(product)};
}

BivariateSides septuple_sides(Exponent order) {
    // (q^2,q^3,q^5;q^5) sum (-1)^n (q^((5n^2-3n)/2) z^(5n) + q^((5n^2+3n)/2) z^(5n+3))
    // - (q,q^4,q^5;q^5) sum (-1)^n (q^((5n^2-n)/2) z^(5n+1) + q^((5n^2+n)/2) z^(5n+2))
    ZSeries first(order);
    ZSeries second(order);
    const auto add_terms = [&](Exponent n) {
        const Integer sg = (n % 2 == 0) ? 1 : -1;
        bool any = false;
        const auto put = [&](ZSeries& target, Exponent qexp, Exponent zexp, const Integer& c) {
            if (qexp <= order) {
                target.add_term(zexp, Series::monomial(c, qexp, order));
                any = true;
            }
        };
        put(first, pentagonal_like(5, -3, n, 2), 5 * n, sg);
        put(first, pentagonal_like(5, 3, n, 2), 5 * n + 3, sg);
        put(second, pentagonal_like(5, -1, n, 2), 5 * n + 1, -sg);
        put(second, pentagonal_like(5, 1, n, 2), 5 * n + 2, -sg);
        return any;
    };
    for (Exponent n = 0; add_terms(n); ++n) {
    }
    for (Exponent n = -1; add_terms(n); --n) {
    }
    const Series p23 = expand(ProductSpec{{{2, 5, 1, 1}, {3, 5, 1, 1}, {5, 5, 1, 1}}}, order);
    const Series p14 = expand(ProductSpec{{{1, 5, 1, 1}, {4, 5, 1, 1}, {5, 5, 1, 1}}}, order);
    ZSeries sum = first * p23;
    sum += second * p14;

    // (q;q)^2 prod_{n>=0} (1 - z q^n)(1 - z^-1 q^(n+1))(1 - z^2 q^n)(1 - z^-2 q^(n+1))
    ZSeries product(order);
    product.add_term(0, pow(pochhammer(1, 1, order), 2));
    for (Exponent n = 0; n <= order; ++n) {
        product.multiply_binomial(-1, 1, n);
        product.multiply_binomial(-1, 2, n);
        if (n + 1 <= order) {
            product.multiply_binomial(-1, -1, n + 1);
            product.multiply_binomial(-1, -2, n + 1);
        }
    }
    return {std::move(sum), std::move(product)};
}

BivariateSides jtp_sides(Exponent order, JtpForm form) {
    ZSeries sum(order);
    ZSeries product(order);
    if (form == JtpForm::odd) {
        for (Exponent n = 0; n * (n + 1) / 2 <= order; ++n) {
            for (const Exponent m : {n, -n - 1}) {
                sum.add_term(2 * m + 1, Series::monomial(m % 2 == 0 ? 1 : -1, n * (n + 1) / 2, order));
            }
        }
        product.add_term(1, pochhammer(1, 1, order));
        product.add_term(-1, -pochhammer(1, 1, order));
        for (Exponent n = 1; n <= order; ++n) {
            product.multiply_binomial(-1, -2, n);
            product.multiply_binomial(-1, 2, n);
        }
    } else {
        for (Exponent n = 0; n * n <= order; ++n) {
            sum.add_term(n, Series::monomial(1, n * n, order));
            if (n != 0) {
                sum.add_term(-n, Series::monomial(1, n * n, order));
            }
        }
        product.add_term(0, pochhammer(2, 2, order));
        for (Exponent n = 0; 2 * n + 1 <= order; ++n) {
            product.multiply_binomial(1, -1, 2 * n + 1);
            product.multiply_binomial(1, 1, 2 * n + 1);
        }
    }
    return {std::move(sum), std::move(product)};
}

namespace {

IdentityReport verify_sides(const std::string& id, const BivariateSides& sides, Exponent order) {
    const Stopwatch clock;
    const auto mm = first_mismatch(sides.sum, sides.product, order);
    std::optional<Exponent> q_exponent;
    std::string variant;
    if (mm) {
        q_exponent = mm->first;
        variant = "z^" + std::to_string(mm->second);
    }
    auto r = make_exact_report(id, {}, order, q_exponent, variant);
    r.millis = clock.millis();
    return r;
}

}  // namespace

IdentityReport verify_quintuple(Exponent order) {
    if (order < 1) {
        throw DomainError("quintuple verification needs order >= 1");
    }
    const Stopwatch clock;
    auto r = verify_sides("QUINTUPLE", quintuple_sides(order), order);
    r.millis = clock.millis();
    return r;
}

IdentityReport verify_septuple(Exponent order) {
    if (order < 1) {
        throw DomainError("septuple verification needs order >= 1");
    }
    const Stopwatch clock;
    auto r = verify_sides("SEPTUPLE", septuple_sides(order), order);
    r.millis = clock.millis();
    return r;
}

IdentityReport verify_jtp(Exponent order, JtpForm form) {
    if (order < 1) {
        throw DomainError("Jacobi triple product verification needs order >= 1");
    }
    const Stopwatch clock;
    auto r = verify_sides(form == JtpForm::odd ? "JTP-ODD" : "JTP-EVEN", jtp_sides(order, form),
                          order);
    r.millis = clock.millis();
    return r;
}

Series thm16_lhs(Exponent ell, Exponent n, Exponent j, Exponent order) {
    if (n < 1 || ell < 1 || ell >= n || 2 * ell == n || j < 0) {
        throw DomainError("product theorem needs n >= 1, 1 <= l < n, 2l != n, j >= 0 (got l=" +
                          std::to_string(ell) + ", n=" + std::to_string(n) +
                          ", j=" + std::to_string(j) + ")");
    }
    // Numerator factors (1 + q^e) with e <= 0 become 2 (e = 0) or
    // q^e (1 + q^-e) (e < 0); collect that offset first.
    Exponent offset = 0;
    Integer constant = 1;
    std::vector<Exponent> plus_exponents;
    for (Exponent m = 1;; ++m) {
        const Exponent a = 2 * n * m - n * (j + 2) + 2 * ell;
        const Exponent b = 2 * n * m + n * j - 2 * ell;
        if (a > 0 && b > 0) {
            break;
        }
        for (const Exponent e : {a, b}) {
            if (e == 0) {
                constant *= 2;
            } else if (e < 0) {
                offset += e;
                plus_exponents.push_back(-e);
            }
        }
    }
    const Exponent work = order - offset;
    DenseSeries acc(work);
    for (const Exponent e : plus_exponents) {
        if (e <= work) {
            acc.multiply(-1, e);
        }
    }
    for (Exponent m = 1;; ++m) {
        const Exponent num[] = {n * m, 2 * n * m - n * (j + 2) + 2 * ell, 2 * n * m + n * j - 2 * ell};
        const Exponent den[] = {n * m, n * m + ell - n, n * m + ell - n, n * m - ell, n * m - ell};
        bool any = false;
        for (const Exponent e : num) {
            if (e > 0 && e <= work) {
                acc.multiply(-1, e);
                any = true;
            }
        }
        for (const Exponent e : den) {
            if (e <= work) {
                acc.divide(1, e);
                any = true;
            }
        }
        if (!any && n * m - ell > work && 2 * n * m - n * (j + 2) + 2 * ell > work) {
            break;
        }
    }
    if (constant != 1) {
        acc.scale(constant);
    }
    return acc.take(offset);
}

}  // namespace qseries
