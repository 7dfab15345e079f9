#pragma once

#include "qseries/macmahon.hpp"
#include "qseries/series.hpp"

// Exhaustive enumerators used to cross-check the analytic pipelines. Every
// function throws CapExceededError beyond its cap instead of truncating.
namespace qseries::oracle {

inline constexpr Exponent kMaxMK = 4;
inline constexpr Exponent kMaxMN = 30;
inline constexpr Exponent kMaxPartitionN = 60;
inline constexpr Exponent kMaxPairK = 6;
inline constexpr Exponent kMaxNestedK = 6;
inline constexpr Exponent kMaxNestedN = 60;

/// sum over 0 < t_1 < ... < t_k and m_i >= 1 with sum m_i t_i = n of prod m_i.
Integer m_oracle(Exponent k, Exponent n);

/// Same with every t_i odd.
Integer modd_oracle(Exponent k, Exponent n);

/// Number of 3-colored partitions of n.
Integer p3_oracle(Exponent n);

/// Number of overpartitions of n.
Integer overp_oracle(Exponent n);

/// Pairs (lambda, mu) of subsets of {1..k} with |lambda| + |mu| = n and
/// #lambda - #mu = m.
Integer p_pair_oracle(Exponent k, Exponent n, Exponent m);

/// Literal expansion of the nested defining sum of the k-th member of a family.
Series nested_family_oracle(const FamilySpec& spec, Exponent k, Exponent order);

}  // namespace qseries::oracle
