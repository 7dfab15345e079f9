#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseries/integer.hpp"

namespace qseries {

enum class Outcome {
    exact_to_order,          ///< both sides agree on every exponent up to the order
    mismatch,                ///< a coefficient differs inside the claimed range
    valid_to_claimed_order,  ///< approximant agrees through its claimed O(q^(n+1))
};

std::string to_string(Outcome o);

using Params = std::vector<std::pair<std::string, Exponent>>;

/// Result of verifying one identity at one parameter cell.
struct IdentityReport {
    std::string identity;
    Params params;
    Exponent order = 0;
    Outcome outcome = Outcome::mismatch;
    std::optional<Exponent> first_mismatch;
    std::int64_t millis = 0;
    std::string variant;

    /// True when the outcome meets the identity's claim.
    bool passed() const noexcept { return outcome != Outcome::mismatch; }
};

/// Exact identity: exact-to-order iff no mismatch at or below `order`.
IdentityReport make_exact_report(std::string identity, Params params, Exponent order,
                                 std::optional<Exponent> first_mismatch, std::string variant = {});

/// Truncated approximant claimed to hold through `claimed`; mismatches above
/// `claimed` are recorded but still count as valid.
IdentityReport make_claimed_report(std::string identity, Params params, Exponent order,
                                   Exponent claimed, std::optional<Exponent> first_mismatch,
                                   std::string variant = {});

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace qseries
