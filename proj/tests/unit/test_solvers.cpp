#include <gtest/gtest.h>

#include <bit>
#include <limits>

#include "fpr/cc_solver.hpp"
#include "fpr/error.hpp"
#include "fpr/instances.hpp"
#include "fpr/monroe_solver.hpp"
#include "fpr/oracle.hpp"
#include "fpr/reduction.hpp"
#include "fpr/verify/oracles.hpp"
#include "helpers.hpp"

namespace fpr {
namespace {

const auto kBorda = DissatisfactionFunction::borda();

std::vector<std::string> committee_names(const Election& e, const SolveResult& r) {
  std::vector<std::string> out;
  for (CandidateId c : r.assignment.committee()) out.push_back(e.name(c));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(SolveCc, TopCandidateOfEveryVote) {
  for (int m = 1; m <= 3; ++m) {
    const Election e = gen_example_sc_gap(m, 2);
    EXPECT_EQ(solve_cc(e, 1, kBorda, Aggregator::kSum).objective, 0);
    EXPECT_EQ(solve_cc(e, 2, kBorda, Aggregator::kSum).objective, 0);
  }
}

TEST(SolveCc, TwelveVotersPairOfMembers) {
  const Election e = gen_example_narcissistic_util();
  const SolveResult r = solve_cc(e, 2, kBorda, Aggregator::kSum);
  EXPECT_EQ(r.objective, verify::exhaustive_cc(e, 2, kBorda, Aggregator::kSum));
  EXPECT_EQ(r.objective, 7);
  EXPECT_EQ(committee_names(e, r), (std::vector<std::string>{"c", "e"}));
  EXPECT_TRUE(validate_assignment(e, r.assignment, Rule::kCC));
  EXPECT_TRUE(contiguity_report(e, r.assignment).contiguous);
}

TEST(SolveCc, KEqualsMIsFree) {
  const Election e = gen_random_single_crossing(5, 7, 3);
  EXPECT_EQ(solve_cc(e, 5, kBorda, Aggregator::kSum).objective, 0);
  EXPECT_EQ(solve_cc(e, 5, kBorda, Aggregator::kMax).objective, 0);
}

TEST(SolveCc, RejectsNonSingleCrossingAndBadK) {
  EXPECT_THROW(solve_cc(test::letters({"ab", "ba", "ab"}), 1, kBorda, Aggregator::kSum),
               DomainViolation);
  const Election e = gen_example_narcissistic_util();
  EXPECT_THROW(solve_cc(e, 0, kBorda, Aggregator::kSum), InvalidInput);
  EXPECT_THROW(solve_cc(e, 7, kBorda, Aggregator::kSum), InvalidInput);
}

TEST(SolveCc, MatchesExhaustiveSearch) {
  const auto approval = DissatisfactionFunction::t_approval(2);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int m = 1 + seed % 6, n = 1 + (seed / 6) % 8;
    const Election e = gen_random_single_crossing(m, n, 40 + seed);
    for (int k = 1; k <= std::min(3, m); ++k) {
      for (Aggregator agg : {Aggregator::kSum, Aggregator::kMax}) {
        for (const auto& alpha : {kBorda, approval}) {
          const SolveResult r = solve_cc(e, k, alpha, agg);
          ASSERT_EQ(r.objective, verify::exhaustive_cc(e, k, alpha, agg))
              << "seed " << seed << " k " << k;
          ASSERT_EQ(score(e, r.assignment, alpha, agg), r.objective);
        }
      }
    }
  }
}

TEST(SolveCcWidth, SingletonsMatchPlainDp) {
  const Election e = gen_random_single_crossing(5, 6, 11);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(solve_cc_width(e, ClonePartition::singletons(5), k, kBorda, Aggregator::kSum)
                  .objective,
              solve_cc(e, k, kBorda, Aggregator::kSum).objective);
  }
}

TEST(SolveCcWidth, ClonedPairsMatchExhaustive) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const ClonedInstance ci = gen_cloned_pairs(gen_random_single_crossing(3, 5, seed), seed);
    for (int k = 1; k <= 3; ++k) {
      for (Aggregator agg : {Aggregator::kSum, Aggregator::kMax}) {
        const SolveResult r = solve_cc_width(ci.election, ci.partition, k, kBorda, agg);
        ASSERT_EQ(r.objective, verify::exhaustive_cc(ci.election, k, kBorda, agg))
            << "seed " << seed << " k " << k;
        ASSERT_EQ(score(ci.election, r.assignment, kBorda, agg), r.objective);
      }
    }
    EXPECT_EQ(solve_cc_width(ci.election, ci.partition, ci.election.m(), kBorda,
                             Aggregator::kSum)
                  .objective,
              0);
  }
}

TEST(MonroeDp, RotationProfileIsFree) {
  const Election e = build_rotation_profile(test::ids({0, 1, 2, 3}), 3);
  EXPECT_EQ(solve_monroe_egalitarian_sc_narcissistic(e, 4, kBorda).objective, 0);
}

TEST(MonroeDp, TwelveVoters) {
  const Election e = gen_example_narcissistic_util();
  const SolveResult r = solve_monroe_egalitarian_sc_narcissistic(e, 2, kBorda);
  EXPECT_EQ(r.objective, verify::exhaustive_monroe(e, 2, kBorda, Aggregator::kMax));
  EXPECT_EQ(r.objective, 2);
  EXPECT_TRUE(validate_assignment(e, r.assignment, Rule::kMonroe));
}

TEST(MonroeDp, RejectsOutsideDomain) {
  EXPECT_THROW(solve_monroe_egalitarian_sc_narcissistic(gen_example_sc_gap(2, 1), 2, kBorda),
               DomainViolation);
  EXPECT_THROW(solve_monroe_egalitarian_sc_narcissistic(test::letters({"ab", "ba", "ab"}), 1,
                                                        kBorda),
               DomainViolation);
}

TEST(MonroeDp, MatchesExhaustiveOnNarcissisticProfiles) {
  const auto approval = DissatisfactionFunction::t_approval(2);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int m = 1 + seed % 5;
    const int n = m + (seed / 5) % (8 - m + 1);
    const Election e = gen_random_sc_narcissistic(m, n, 500 + seed);
    for (int k = 1; k <= std::min({3, m, n}); ++k) {
      for (const auto& alpha : {kBorda, approval}) {
        const SolveResult r = solve_monroe_egalitarian_sc_narcissistic(e, k, alpha);
        ASSERT_EQ(r.objective, verify::exhaustive_monroe(e, k, alpha, Aggregator::kMax))
            << "seed " << seed << " k " << k;
        ASSERT_TRUE(validate_assignment(e, r.assignment, Rule::kMonroe));
      }
    }
  }
}

TEST(MonroeDp, SizeOneBlocks) {
  const Election e = build_rotation_profile(test::ids({0, 1, 2}), 1);
  EXPECT_EQ(solve_monroe_egalitarian_sc_narcissistic(e, 3, kBorda).objective, 0);
  const Election twice = gen_random_sc_narcissistic(2, 3, 8);
  EXPECT_EQ(solve_monroe_egalitarian_sc_narcissistic(twice, 2, kBorda).objective,
            verify::exhaustive_monroe(twice, 2, kBorda, Aggregator::kMax));
}

TEST(MonroeContiguous, TwelveVotersSum) {
  const Election e = gen_example_narcissistic_util();
  const SolveResult r = solve_monroe_contiguous(e, 2, kBorda, Aggregator::kSum);
  EXPECT_EQ(r.objective, 13);
  EXPECT_EQ(committee_names(e, r), (std::vector<std::string>{"b", "d"}));
}

TEST(MonroeContiguous, ThreeBlockTemplateSum) {
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(solve_monroe_contiguous(gen_example_sp(m), 2, kBorda, Aggregator::kSum).objective,
              2 * (m + 1));
  }
}

// Blocks of floor/ceil size in voter order, members increasing in voter 1's
// order: enumerate every size layout and every increasing member tuple.
Objective ordered_blocks_enumeration(const Election& e, int k, Aggregator agg) {
  const int n = e.n(), m = e.m(), extra = n % k;
  const std::vector<CandidateId> order = first_voter_order(e);
  Objective best = std::numeric_limits<Objective>::max();
  for (int mask = 0; mask < (1 << k); ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != extra) continue;
    for (int pick = 0; pick < (1 << m); ++pick) {
      if (std::popcount(static_cast<unsigned>(pick)) != k) continue;
      std::vector<CandidateId> members;
      for (int j = 0; j < m; ++j) {
        if (pick >> j & 1) members.push_back(order[j]);
      }
      std::vector<CandidateId> reps;
      for (int b = 0; b < k; ++b) {
        reps.insert(reps.end(), n / k + (mask >> b & 1), members[b]);
      }
      best = std::min(best, score(e, Assignment(reps, k), kBorda, agg));
    }
  }
  return best;
}

TEST(MonroeContiguous, MatchesOrderedBlockEnumeration) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Election e = verify::random_election(2 + seed % 4, 2 + seed % 6, 70 + seed);
    for (int k = 1; k <= std::min(e.m(), e.n()); ++k) {
      for (Aggregator agg : {Aggregator::kSum, Aggregator::kMax}) {
        const SolveResult r = solve_monroe_contiguous(e, k, kBorda, agg);
        ASSERT_EQ(r.objective, ordered_blocks_enumeration(e, k, agg))
            << "seed " << seed << " k " << k;
        ASSERT_TRUE(contiguity_report(e, r.assignment).contiguous);
        ASSERT_GE(r.objective,
                  best_contiguous_bruteforce(e, k, kBorda, agg, Rule::kMonroe).objective);
      }
    }
  }
}

TEST(MonroeContiguous, NeverBeatsUnrestricted) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Election e = verify::random_election(3, 4, 170 + seed);
    for (Aggregator agg : {Aggregator::kSum, Aggregator::kMax}) {
      EXPECT_GE(solve_monroe_contiguous(e, 2, kBorda, agg).objective,
                verify::exhaustive_monroe(e, 2, kBorda, agg));
    }
  }
}

}  // namespace
}  // namespace fpr
