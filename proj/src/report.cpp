#include "qseries/report.hpp"

namespace qseries {

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::exact_to_order:
            return "exact-to-order";
        case Outcome::mismatch:
            return "mismatch";
        case Outcome::valid_to_claimed_order:
            return "valid-to-claimed-order";
    }
    return "mismatch";
}

IdentityReport make_exact_report(std::string identity, Params params, Exponent order,
                                 std::optional<Exponent> first_mismatch, std::string variant) {
    IdentityReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.order = order;
    r.first_mismatch = first_mismatch;
    r.outcome = first_mismatch ? Outcome::mismatch : Outcome::exact_to_order;
    r.variant = std::move(variant);
    return r;
}

IdentityReport make_claimed_report(std::string identity, Params params, Exponent order,
                                   Exponent claimed, std::optional<Exponent> first_mismatch,
                                   std::string variant) {
    IdentityReport r = make_exact_report(std::move(identity), std::move(params), order,
                                         first_mismatch, std::move(variant));
    if (first_mismatch && *first_mismatch > claimed) {
        r.outcome = Outcome::valid_to_claimed_order;
    } else if (!first_mismatch) {
        r.outcome = Outcome::valid_to_claimed_order;
    }
    return r;
}

}  // namespace qseries
