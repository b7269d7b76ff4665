#pragma once

// Fixed counterexample profiles and seeded random profiles in the domains the
// solvers cover. Everything here is a pure function of its arguments.

#include <cstdint>

#include "fpr/core.hpp"
#include "fpr/domains.hpp"

namespace fpr {

/// Four groups of n identical voters over {c1, c2} + A + B, |A| = |B| = m:
///   c1 > B > c2 > A,  c1 > c2 > rev(B) > A,  c1 > c2 > A > rev(B),
///   c1 > rev(A) > c2 > rev(B).
/// Single-crossing, not narcissistic. Candidate ids: c1, c2, a1..am, b1..bm.
Election gen_example_sc_gap(int m, int n);

/// The 12-voter profile over {a, ..., f} that is narcissistic and
/// single-crossing, yet whose utilitarian 2-Monroe optimum ({c, e}, 11) is
/// not contiguous.
Election gen_example_narcissistic_util();

/// Four voters over x1..xm, y1..ym, a, b, c, d, single-peaked on
/// example_sp_axis(m). Candidate ids in that order.
Election gen_example_sp(int m);
/// xm, ..., x1, a, b, c, d, y1, ..., ym.
Axis example_sp_axis(int m);

/// Random single-crossing profile: a random first vote, then each further
/// vote applies a few random adjacent swaps that each invert a pair not
/// inverted before. Consecutive voters may coincide.
Election gen_random_single_crossing(int m, int n, std::uint64_t seed);

/// Random narcissistic single-crossing profile: the rotation chain of a
/// random candidate order with every rotation used at least once and the
/// remaining n - m voters spread at random. Throws InvalidInput if n < m.
Election gen_random_sc_narcissistic(int m, int n, std::uint64_t seed);

struct ClonedInstance {
  Election election;
  ClonePartition partition;  // pairs and singletons, width <= 2
};

/// Clones a random nonempty subset of `base`'s candidates; clone of candidate
/// i gets the id base.m() + (its rank among cloned ids) and name "<name>'".
/// Each voter places every clone pair in a random internal order, so the
/// result usually stops being single-crossing while its contraction to
/// `base` still is.
ClonedInstance gen_cloned_pairs(const Election& base, std::uint64_t seed);

}  // namespace fpr
