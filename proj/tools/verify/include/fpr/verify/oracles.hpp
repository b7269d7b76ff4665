#pragma once

// Deliberately naive reference implementations used only by tests and the
// acceptance suite. They share no code with the library solvers beyond the
// Election type, so agreement between the two is meaningful.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fpr/core.hpp"
#include "fpr/domains.hpp"

namespace fpr::verify {

/// O(m^2) pair counting.
std::int64_t naive_kendall_tau(const PreferenceOrder& a, const PreferenceOrder& b);

/// Definition check: for every candidate pair, the voters preferring the
/// pair's first-voter winner form a prefix.
bool naive_single_crossing(const Election& election);

/// Definition check: walking away from the peak along the axis, each vote's
/// positions strictly increase on both sides.
bool naive_single_peaked(const Election& election, const Axis& axis);

/// Every committee of size <= k as a bitmask; voters take their best member.
Objective exhaustive_cc(const Election& election, int k,
                        const DissatisfactionFunction& alpha, Aggregator agg);

/// Every map voters -> committee where each member serves floor(n/k) or
/// ceil(n/k) voters. nullopt if none exists.
std::optional<Objective> exhaustive_balanced(const Election& election,
                                             std::span<const CandidateId> committee,
                                             const DissatisfactionFunction& alpha,
                                             Aggregator agg);

/// Minimum of exhaustive_balanced over all size-k committees.
Objective exhaustive_monroe(const Election& election, int k,
                            const DissatisfactionFunction& alpha, Aggregator agg);

/// Smallest total alpha a candidate can collect from any `size` voters.
Objective lowest(const Election& election, CandidateId c, int size,
                 const DissatisfactionFunction& alpha);

/// Uniformly random votes (no domain restriction).
Election random_election(int m, int n, std::uint64_t seed);

}  // namespace fpr::verify
