#pragma once

// Monroe winner determination restricted to contiguous, candidate-ordered
// voter blocks. On single-crossing narcissistic profiles the egalitarian
// optimum always has this shape, which makes the DP exact there.

#include <vector>

#include "fpr/core.hpp"

namespace fpr {

/// worst(c, i) = largest position of candidate c among the `length` voters
/// ending at 1-based voter i (i >= length). Built with a monotone-queue
/// sliding maximum, O(n m) overall.
class WorstPosWindow {
 public:
  WorstPosWindow(const Election& election, int length);

  int length() const { return length_; }
  /// Requires length <= i <= n.
  int worst(CandidateId c, int i) const {
    return worst_[static_cast<std::size_t>(c.index()) * stride_ + i];
  }

 private:
  int length_;
  std::size_t stride_;
  std::vector<int> worst_;
};

/// Optimal egalitarian (max) k-Monroe assignment of a single-crossing
/// narcissistic election. Throws DomainViolation if either property fails and
/// InvalidInput unless 1 <= k <= min(m, n). O(n m^2 k).
SolveResult solve_monroe_egalitarian_sc_narcissistic(
    const Election& election, int k, const DissatisfactionFunction& alpha);

/// Best Monroe assignment among those whose blocks are contiguous voter
/// intervals, each of size floor(n/k) or ceil(n/k), with representatives in
/// voter 1's order. Works on any profile; optimal over all assignments only
/// where that class is known to contain an optimum.
SolveResult solve_monroe_contiguous(const Election& election, int k,
                                    const DissatisfactionFunction& alpha,
                                    Aggregator agg);

}  // namespace fpr
