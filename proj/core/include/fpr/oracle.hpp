#pragma once

// Exhaustive reference solvers. They make no domain assumptions and are the
// ground truth the polynomial solvers are tested against.

#include <cstdint>
#include <optional>
#include <span>

#include "fpr/core.hpp"

namespace fpr {

struct OracleConfig {
  /// Largest number of committees (or block structures times injections)
  /// an enumeration may visit before it throws SizeLimit.
  std::uint64_t budget = 1'000'000;
  /// Worker threads for committee enumeration; results do not depend on it.
  int threads = 1;

  /// Defaults overridden by FPR_BUDGET and FPR_THREADS when set. Without
  /// FPR_THREADS the hardware concurrency is used.
  static OracleConfig from_env();
};

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial_saturating(int n, int r);

/// Optimal CC committee of size exactly k by enumeration; each voter is
/// represented by her favorite member. Ties go to the lexicographically
/// smallest committee.
SolveResult solve_cc_bruteforce(const Election& election, int k,
                                const DissatisfactionFunction& alpha,
                                Aggregator agg,
                                const OracleConfig& config = OracleConfig::from_env());

/// Best Monroe-valid assignment that uses every member of `committee`
/// (pairwise distinct, exactly k of them, k <= n). Sum is a min-cost flow;
/// Max searches the smallest feasible threshold and then minimises the sum
/// below it. Voters with identical cost vectors share a flow node.
std::optional<Assignment> optimal_balanced_assignment(
    const Election& election, std::span<const CandidateId> committee, int k,
    const DissatisfactionFunction& alpha, Aggregator agg);

/// Optimal Monroe assignment over all committees of size k.
SolveResult solve_monroe_bruteforce(const Election& election, int k,
                                    const DissatisfactionFunction& alpha,
                                    Aggregator agg,
                                    const OracleConfig& config = OracleConfig::from_env());

/// Optimum over assignments whose representatives each serve one contiguous
/// interval of voters, with distinct representatives per interval and no
/// constraint on their order. Monroe uses exactly k intervals of sizes
/// floor(n/k) / ceil(n/k); CC any partition into at most k intervals.
SolveResult best_contiguous_bruteforce(const Election& election, int k,
                                       const DissatisfactionFunction& alpha,
                                       Aggregator agg, Rule rule,
                                       const OracleConfig& config = OracleConfig::from_env());

}  // namespace fpr
