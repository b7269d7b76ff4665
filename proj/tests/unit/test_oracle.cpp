#include <gtest/gtest.h>

#include <cstdlib>

#include "fpr/error.hpp"
#include "fpr/flow.hpp"
#include "fpr/instances.hpp"
#include "fpr/oracle.hpp"
#include "fpr/verify/oracles.hpp"
#include "helpers.hpp"

namespace fpr {
namespace {

const auto kBorda = DissatisfactionFunction::borda();

TEST(Flow, MaxFlowSmallGraph) {
  FlowNetwork g(4);
  g.add_arc(0, 1, 3);
  g.add_arc(0, 2, 2);
  g.add_arc(1, 2, 5);
  g.add_arc(1, 3, 2);
  g.add_arc(2, 3, 3);
  EXPECT_EQ(g.max_flow(0, 3), 5);
}

TEST(Flow, MinCostPrefersCheapPath) {
  FlowNetwork g(4);
  const int cheap = g.add_arc(0, 1, 1, 1);
  g.add_arc(0, 2, 2, 5);
  g.add_arc(1, 3, 2, 1);
  g.add_arc(2, 3, 2, 1);
  const auto r = g.min_cost_flow(0, 3, 2);
  EXPECT_EQ(r.flow, 2);
  EXPECT_EQ(r.cost, 2 + 6);
  EXPECT_EQ(g.flow(cheap), 1);
}

TEST(Flow, NegativeCostRejected) {
  FlowNetwork g(2);
  EXPECT_THROW(g.add_arc(0, 1, 1, -1), InvalidInput);
}

TEST(Binomial, Saturates) {
  EXPECT_EQ(binomial_saturating(6, 2), 15u);
  EXPECT_EQ(binomial_saturating(5, 0), 1u);
  EXPECT_EQ(binomial_saturating(3, 4), 0u);
  EXPECT_EQ(binomial_saturating(400, 200), std::numeric_limits<std::uint64_t>::max());
}

TEST(CcBruteforce, Examples) {
  const Election e = gen_example_narcissistic_util();
  const SolveResult r = solve_cc_bruteforce(e, 2, kBorda, Aggregator::kSum);
  EXPECT_EQ(r.objective, verify::exhaustive_cc(e, 2, kBorda, Aggregator::kSum));
  EXPECT_EQ(r.objective, 7);
  EXPECT_EQ(solve_cc_bruteforce(e, 6, kBorda, Aggregator::kSum).objective, 0);
  EXPECT_EQ(solve_cc_bruteforce(test::letters({"cab"}), 1, kBorda, Aggregator::kMax).objective,
            0);
}

TEST(CcBruteforce, BudgetEnforced) {
  OracleConfig cfg;
  cfg.budget = 10;
  EXPECT_THROW(solve_cc_bruteforce(gen_example_narcissistic_util(), 3, kBorda,
                                   Aggregator::kSum, cfg),
               SizeLimit);
}

TEST(CcBruteforce, ThreadCountDoesNotChangeAnswer) {
  const Election e = verify::random_election(7, 6, 99);
  OracleConfig one, many;
  many.threads = 4;
  for (int k = 1; k <= 3; ++k) {
    const SolveResult a = solve_cc_bruteforce(e, k, kBorda, Aggregator::kSum, one);
    const SolveResult b = solve_cc_bruteforce(e, k, kBorda, Aggregator::kSum, many);
    EXPECT_EQ(a.objective, b.objective);
    EXPECT_EQ(a.assignment, b.assignment);
  }
}

TEST(BalancedAssignment, CommitteeOfTheInterleavedSplit) {
  const Election e = gen_example_narcissistic_util();
  const auto ce = optimal_balanced_assignment(e, test::ids({2, 4}), 2, kBorda, Aggregator::kSum);
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(score(e, *ce, kBorda, Aggregator::kSum), 11);
  EXPECT_TRUE(validate_assignment(e, *ce, Rule::kMonroe));
  const auto cd = optimal_balanced_assignment(e, test::ids({2, 3}), 2, kBorda, Aggregator::kSum);
  ASSERT_TRUE(cd.has_value());
  EXPECT_GE(score(e, *cd, kBorda, Aggregator::kSum), 12);
}

TEST(BalancedAssignment, DistinctTopsCostNothing) {
  const Election e = test::letters({"abc", "bca", "cab"});
  const auto a = optimal_balanced_assignment(e, test::ids({0, 1, 2}), 3, kBorda,
                                             Aggregator::kMax);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(score(e, *a, kBorda, Aggregator::kMax), 0);
}

TEST(BalancedAssignment, RejectsWrongCommitteeSize) {
  const Election e = test::letters({"abc", "bca", "cab"});
  EXPECT_THROW(optimal_balanced_assignment(e, test::ids({0, 1}), 3, kBorda, Aggregator::kSum),
               InvalidInput);
  EXPECT_THROW(optimal_balanced_assignment(e, test::ids({0, 0}), 2, kBorda, Aggregator::kSum),
               InvalidInput);
}

TEST(BalancedAssignment, MatchesEnumeration) {
  const auto approval = DissatisfactionFunction::t_approval(2);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int m = 2 + seed % 4, n = 1 + (seed / 4) % 8;
    const Election e = verify::random_election(m, n, 1200 + seed);
    const int k = 1 + seed % std::min({3, m, n});
    std::vector<CandidateId> committee;
    for (int c = 0; c < k; ++c) committee.emplace_back((c * 7 + static_cast<int>(seed)) % m);
    std::sort(committee.begin(), committee.end());
    if (std::adjacent_find(committee.begin(), committee.end()) != committee.end()) continue;
    for (Aggregator agg : {Aggregator::kSum, Aggregator::kMax}) {
      const auto& alpha = seed % 2 ? approval : kBorda;
      const auto flow = optimal_balanced_assignment(e, committee, k, alpha, agg);
      const auto exact = verify::exhaustive_balanced(e, committee, alpha, agg);
      ASSERT_EQ(flow.has_value(), exact.has_value());
      if (flow) {
        ASSERT_EQ(score(e, *flow, alpha, agg), *exact) << "seed " << seed;
        ASSERT_TRUE(validate_assignment(e, *flow, Rule::kMonroe));
      }
    }
  }
}

TEST(MonroeBruteforce, GapTemplate) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 2; ++n) {
      const Election e = gen_example_sc_gap(m, n);
      EXPECT_EQ(solve_monroe_bruteforce(e, 2, kBorda, Aggregator::kSum).objective, 2 * n);
      EXPECT_EQ(solve_monroe_bruteforce(e, 2, kBorda, Aggregator::kMax).objective, 1);
    }
  }
}

TEST(MonroeBruteforce, TwelveVotersAndPeakTemplate) {
  EXPECT_EQ(solve_monroe_bruteforce(gen_example_narcissistic_util(), 2, kBorda,
                                    Aggregator::kSum)
                .objective,
            11);
  for (int m = 1; m <= 3; ++m) {
    const Election e = gen_example_sp(m);
    EXPECT_EQ(solve_monroe_bruteforce(e, 2, kBorda, Aggregator::kSum).objective, 4);
    EXPECT_EQ(solve_monroe_bruteforce(e, 2, kBorda, Aggregator::kMax).objective, 2);
  }
}

TEST(MonroeBruteforce, MatchesExhaustive) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Election e = verify::random_election(2 + seed % 4, 1 + seed % 6, 2100 + seed);
    for (int k = 1; k <= std::min({3, e.m(), e.n()}); ++k) {
      for (Aggregator agg : {Aggregator::kSum, Aggregator::kMax}) {
        ASSERT_EQ(solve_monroe_bruteforce(e, k, kBorda, agg).objective,
                  verify::exhaustive_monroe(e, k, kBorda, agg));
      }
    }
  }
}

TEST(ContiguousBruteforce, GapTemplateSum) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 2; ++n) {
      EXPECT_EQ(best_contiguous_bruteforce(gen_example_sc_gap(m, n), 2, kBorda,
                                           Aggregator::kSum, Rule::kMonroe)
                    .objective,
                n * (m + 2));
    }
  }
}

TEST(ContiguousBruteforce, PeakTemplateCcIsCostly) {
  for (int m = 1; m <= 3; ++m) {
    for (Aggregator agg : {Aggregator::kSum, Aggregator::kMax}) {
      EXPECT_GE(best_contiguous_bruteforce(gen_example_sp(m), 2, kBorda, agg, Rule::kCC)
                    .objective,
                m + 1);
    }
  }
}

TEST(ContiguousBruteforce, SizeOneBlocksAreAnInjection) {
  const Election e = verify::random_election(4, 3, 5);
  for (Aggregator agg : {Aggregator::kSum, Aggregator::kMax}) {
    Objective best = std::numeric_limits<Objective>::max();
    std::vector<int> perm{0, 1, 2, 3};
    do {
      std::vector<Objective> vals;
      for (int v = 0; v < 3; ++v) vals.push_back(kBorda(e.position(v, CandidateId(perm[v]))));
      best = std::min(best, aggregate(agg, vals));
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(best_contiguous_bruteforce(e, 3, kBorda, agg, Rule::kMonroe).objective, best);
  }
}

TEST(OracleConfig, ReadsEnvironment) {
  ::setenv("FPR_BUDGET", "1234", 1);
  ::setenv("FPR_THREADS", "3", 1);
  const OracleConfig cfg = OracleConfig::from_env();
  EXPECT_EQ(cfg.budget, 1234u);
  EXPECT_EQ(cfg.threads, 3);
  ::setenv("FPR_THREADS", "lots", 1);
  EXPECT_THROW(OracleConfig::from_env(), InvalidInput);
  ::unsetenv("FPR_BUDGET");
  ::unsetenv("FPR_THREADS");
}

}  // namespace
}  // namespace fpr
