#pragma once

// Exact Chamberlin-Courant winner determination on single-crossing profiles
// and on profiles of bounded single-crossing width.

#include <cstddef>
#include <limits>
#include <vector>

#include "fpr/core.hpp"
#include "fpr/domains.hpp"

namespace fpr {

/// Value table of the CC dynamic program.
///
/// value(i, j, t) is the best aggregated dissatisfaction of voters 1..i
/// represented by at most t of the candidates c_1..c_j, where c_1..c_m is
/// voter 1's ranking, under assignments whose blocks are contiguous and
/// follow that ranking. Positions are always taken in the full candidate set.
class CcDpTable {
 public:
  static constexpr Objective kInfinity = Objective{1} << 60;

  CcDpTable(int n, int m, int k)
      : n_(n), m_(m), k_(k),
        values_(static_cast<std::size_t>(n + 1) * (m + 1) * (k + 1),
                kInfinity) {}

  int n() const { return n_; }
  int m() const { return m_; }
  int k() const { return k_; }

  Objective value(int i, int j, int t) const { return values_[index(i, j, t)]; }
  Objective& at(int i, int j, int t) { return values_[index(i, j, t)]; }
  /// Column of values for fixed (j, t), indexed by i = 0..n.
  const Objective* column(int j, int t) const {
    return values_.data() + index(0, j, t);
  }
  Objective* column(int j, int t) { return values_.data() + index(0, j, t); }

 private:
  std::size_t index(int i, int j, int t) const {
    return (static_cast<std::size_t>(j) * (k_ + 1) + t) * (n_ + 1) + i;
  }

  int n_, m_, k_;
  std::vector<Objective> values_;
};

/// Fills the CC table for a single-crossing election (candidates taken in
/// voter 1's order). Throws DomainViolation if the election is not
/// single-crossing and InvalidInput unless 1 <= k <= m.
CcDpTable build_cc_table(const Election& election, int k,
                         const DissatisfactionFunction& alpha, Aggregator agg);

/// Optimal k-CC assignment of a single-crossing election. Every voter is
/// represented by her favorite committee member and the blocks pass
/// contiguity_report. O(m n^2 k).
SolveResult solve_cc(const Election& election, int k,
                     const DissatisfactionFunction& alpha, Aggregator agg);

/// Optimal k-CC assignment given a clone partition whose contraction is
/// single-crossing. Time O(s 2^w k n^2) for s sets of width at most w.
SolveResult solve_cc_width(const Election& election,
                           const ClonePartition& partition, int k,
                           const DissatisfactionFunction& alpha,
                           Aggregator agg);

}  // namespace fpr
