#pragma once

// Recognition and verification of restricted preference domains:
// single-crossing, narcissistic, single-peaked and clone-set structure.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fpr/core.hpp"

namespace fpr {

/// Number of candidate pairs ordered differently by `a` and `b`.
/// O(m log m).
std::int64_t kendall_tau_distance(const PreferenceOrder& a,
                                  const PreferenceOrder& b);

/// True iff, for every pair a, b with a above b in voter 0's order, the
/// voters preferring a to b form a prefix of the voter list.
///
/// Runs in O(n m log m): the condition is equivalent to the inversion sets
/// relative to voter 0 growing monotonically, i.e. to
///   d(v_0, v_{i+1}) == d(v_0, v_i) + d(v_i, v_{i+1})
/// for every consecutive pair, with d the Kendall tau distance.
bool check_single_crossing(const Election& election);

/// A voter permutation under which the election is single-crossing, or
/// nullopt if none exists. perm[i] is the original index of the voter placed
/// at position i.
std::optional<std::vector<int>> find_single_crossing_order(
    const Election& election);

/// Every candidate is ranked first by some voter.
bool check_narcissistic(const Election& election);

/// A societal axis: a left-to-right ordering of all candidates.
class Axis {
 public:
  /// Throws InvalidInput unless `order` is a permutation of 0..m-1.
  explicit Axis(std::vector<CandidateId> order);

  int size() const { return static_cast<int>(order_.size()); }
  std::span<const CandidateId> order() const { return order_; }
  /// 0-based location of `c` on the axis.
  int location(CandidateId c) const { return location_[c.index()]; }
  Axis reversed() const;

  friend bool operator==(const Axis& a, const Axis& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<CandidateId> order_;
  std::vector<int> location_;
};

/// Every vote is single-peaked with respect to `axis`: for each t, the
/// voter's top t candidates occupy a contiguous stretch of the axis.
/// Throws InvalidInput if the axis does not cover the election's candidates.
bool check_single_peaked_axis(const Election& election, const Axis& axis);

/// First axis, in lexicographic order of candidate indices, under which the
/// election is single-peaked. Throws SizeLimit when m > max_m.
std::optional<Axis> find_single_peaked_axis_bruteforce(const Election& election,
                                                       int max_m = 8);

/// Every axis (lexicographic order) under which the election is
/// single-peaked. Throws SizeLimit when m > max_m.
std::vector<Axis> all_single_peaked_axes_bruteforce(const Election& election,
                                                    int max_m = 8);

/// Voter permutation sorting votes lexicographically by the axis locations
/// of their ranked candidates (stable on ties).
std::vector<int> order_voters_by_axis(const Election& election,
                                      const Axis& axis);

/// Ordered partition of the candidates into disjoint sets.
struct ClonePartition {
  std::vector<std::vector<CandidateId>> sets;

  int width() const;
  static ClonePartition singletons(int m);
  static ClonePartition whole(int m);
};

/// True iff every set occupies consecutive positions in every vote.
/// Throws InvalidInput if the sets overlap, leave a candidate uncovered or
/// contain an empty set.
bool verify_clone_partition(const Election& election,
                            const ClonePartition& partition);

/// The same partition with its sets listed in voter 0's order.
ClonePartition normalize_partition(const Election& election,
                                   const ClonePartition& partition);

/// Contract each set to one candidate d_i (index i in the partition order).
/// Throws InvalidInput if the partition is not a valid clone partition.
Election contract_clones(const Election& election,
                         const ClonePartition& partition);

struct WidthResult {
  int width = 1;
  ClonePartition partition;
};

/// Smallest single-crossing width by exhaustive search over clone
/// partitions (which are necessarily intervals of voter 0's ranking).
/// Throws SizeLimit when m > max_m.
WidthResult compute_width_bruteforce(const Election& election, int max_m = 10);

}  // namespace fpr
