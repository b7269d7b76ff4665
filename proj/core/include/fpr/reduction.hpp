#pragma once

// Executable hardness construction: from an election (C, V) and committee
// size k with k | n and n > k, build a single-crossing election whose
// utilitarian Borda-Monroe optimum, at committee size k_sc, equals the
// original optimum plus an offset that depends on (m, n, k) only.
//
// Candidate groups, in id order:  H, F_1..F_m, E_1..E_m, E, D_1..D_m,
// G_1..G_m, G, C' (a copy of C). Voter lists, in order: V_1..V_5.
// Every set lists its members in ascending index wherever the construction
// does not ask for a reversal.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fpr/core.hpp"
#include "fpr/oracle.hpp"

namespace fpr {

/// `copies` identical votes for each rotation of `order`: block i ranks
/// order[i], ..., order[m-1], order[i-1], ..., order[0]. The last voter
/// ranks the reverse of the first. `order` must be a permutation of 0..m-1.
Election build_rotation_profile(std::span<const CandidateId> order, int copies);

/// The order x' with build_rotation_profile(x', c) ending in a vote ranking
/// x, i.e. the reverse of x.
std::vector<CandidateId> rotation_inverse(std::span<const CandidateId> order);

/// n votes over A + B + {target}, |A| = |B| = m n. Output ids: A is
/// 0..mn-1, B is mn..2mn-1, target is 2mn; the target keeps its source
/// name. In vote j the target sits at position mn + (its position in source
/// vote j), A and B keep their internal orders, and the profile remains
/// single-crossing between the sentinels (A > target > B) and
/// (B > target > A).
Election build_adjustment_profile(const Election& source, CandidateId target,
                                  std::span<const std::string> a_names,
                                  std::span<const std::string> b_names);

enum class ReductionGroup { kH, kF, kEi, kE, kD, kGi, kG, kCPrime };

/// Name used in documents: "H", "F", "E_i", "E", "D", "G_i", "G", "C'".
std::string_view to_string(ReductionGroup group);

struct CandidateTag {
  ReductionGroup group;
  int set = 0;     // 1-based index i for F_i, E_i, D_i, G_i; 0 otherwise
  int member = 0;  // 1-based position inside its set
};

/// Set sizes and voter-list sizes as given by the construction's formulas.
struct ReductionSizes {
  std::int64_t h = 0;
  std::int64_t f = 0;                // each F_i
  std::vector<std::int64_t> e_sets;  // |E_i|, i = 1..m (also |D_i|)
  std::int64_t e = 0;
  std::int64_t g_sets = 0;  // each G_i
  std::int64_t g = 0;
  std::int64_t c_prime = 0;
  std::int64_t v1 = 0, v2 = 0, v3 = 0, v4 = 0, v5 = 0;

  std::int64_t candidates() const;
  std::int64_t voters() const { return v1 + v2 + v3 + v4 + v5; }
};

/// Overflow-checked evaluation of the size formulas. Throws InvalidInput on
/// bad parameters and SizeLimit on 64-bit overflow.
ReductionSizes reduction_sizes(int m, int n, int k);

struct ReductionOutput {
  Election sc_election;
  int k_sc = 0;
  std::vector<CandidateTag> candidate_groups;  // per sc candidate
  std::vector<int> voter_lists;                // per sc voter, 1..5
  Election original;
  int k = 0;
  /// c_prime[c] is the sc candidate copying original candidate c.
  std::vector<CandidateId> c_prime;
  ReductionSizes sizes;
};

/// Throws InvalidInput unless 1 <= k <= m, k | n and n > k; SizeLimit if the
/// instance would be too large to materialise.
ReductionOutput build_monroe_reduction(const Election& election, int k);

struct ExtractionReport {
  bool ok = false;
  std::vector<CandidateId> committee;  // original ids, ascending
  std::string message;
};

/// Maps the C' members of `sc_solution`'s committee back to the original
/// candidates. Not ok unless exactly k of them are present, which signals a
/// non-optimal sc solution.
ExtractionReport extract_original_committee(const ReductionOutput& output,
                                            const Assignment& sc_solution);

/// opt(reduced) - opt(original) for utilitarian Borda Monroe, measured on the
/// calibration source of n identical votes c1 > ... > cm, both sides by
/// exhaustive search. Throws SizeLimit if either enumeration is over budget.
Objective calibrate_offset(int m, int n, int k,
                           const OracleConfig& config = OracleConfig::from_env());

}  // namespace fpr
