#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fpr/domains.hpp"
#include "fpr/error.hpp"
#include "fpr/instances.hpp"
#include "fpr/reduction.hpp"
#include "fpr/rng.hpp"
#include "fpr/verify/oracles.hpp"
#include "helpers.hpp"

namespace fpr {
namespace {

TEST(KendallTau, MatchesPairCount) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Election e = verify::random_election(6, 2, seed);
    EXPECT_EQ(kendall_tau_distance(e.voter(0), e.voter(1)),
              verify::naive_kendall_tau(e.voter(0), e.voter(1)));
  }
}

TEST(SingleCrossing, RotationProfile) {
  EXPECT_TRUE(check_single_crossing(build_rotation_profile(test::ids({0, 1, 2, 3}), 3)));
}

TEST(SingleCrossing, PairCrossingTwice) {
  EXPECT_FALSE(check_single_crossing(test::letters({"ab", "ba", "ab"})));
}

TEST(SingleCrossing, SingleVoter) {
  EXPECT_TRUE(check_single_crossing(test::letters({"cab"})));
}

TEST(SingleCrossing, AgreesWithNaiveDefinition) {
  int positives = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Election e = verify::random_election(2 + seed % 4, 1 + seed % 5, seed);
    const bool fast = check_single_crossing(e);
    EXPECT_EQ(fast, verify::naive_single_crossing(e)) << "seed " << seed;
    positives += fast;
  }
  EXPECT_GT(positives, 0);
}

TEST(FindOrder, ShuffledRotationProfile) {
  const Election r = build_rotation_profile(test::ids({0, 1, 2, 3, 4}), 2);
  std::vector<int> perm(r.n());
  std::iota(perm.begin(), perm.end(), 0);
  SplitMix64 rng(17);
  rng.shuffle(perm);
  const Election shuffled = r.reordered(perm);
  const auto order = find_single_crossing_order(shuffled);
  ASSERT_TRUE(order.has_value());
  EXPECT_TRUE(check_single_crossing(shuffled.reordered(*order)));
}

TEST(FindOrder, CyclicProfileHasNone) {
  EXPECT_FALSE(find_single_crossing_order(test::letters({"abc", "bca", "cab"})).has_value());
}

TEST(FindOrder, SingleVoterIdentity) {
  const auto order = find_single_crossing_order(test::letters({"bac"}));
  ASSERT_TRUE(order.has_value());
  EXPECT_EQ(*order, std::vector<int>{0});
}

TEST(FindOrder, AgreesWithExhaustiveOrders) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Election e = verify::random_election(3 + seed % 2, 2 + seed % 4, 300 + seed);
    std::vector<int> perm(e.n());
    std::iota(perm.begin(), perm.end(), 0);
    bool any = false;
    do {
      any = any || verify::naive_single_crossing(e.reordered(perm));
    } while (!any && std::next_permutation(perm.begin(), perm.end()));
    const auto found = find_single_crossing_order(e);
    EXPECT_EQ(found.has_value(), any) << "seed " << seed;
    if (found) EXPECT_TRUE(verify::naive_single_crossing(e.reordered(*found)));
  }
}

TEST(Narcissistic, Cases) {
  EXPECT_TRUE(check_narcissistic(build_rotation_profile(test::ids({0, 1, 2}), 2)));
  EXPECT_FALSE(check_narcissistic(gen_example_sp(2)));
  EXPECT_TRUE(check_narcissistic(test::letters({"a"})));
}

TEST(SinglePeaked, AxisChecks) {
  EXPECT_TRUE(check_single_peaked_axis(gen_example_sp(2), example_sp_axis(2)));
  const Election one = test::letters({"cbad"});
  EXPECT_TRUE(check_single_peaked_axis(one, Axis(test::ids({2, 1, 0, 3}))));
  EXPECT_FALSE(check_single_peaked_axis(test::letters({"acb"}), Axis(test::ids({0, 1, 2}))));
  EXPECT_THROW(Axis(test::ids({0, 0, 1})), InvalidInput);
}

TEST(SinglePeaked, AgreesWithNaive) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Election e = verify::random_election(4, 1 + seed % 3, 900 + seed);
    std::vector<int> perm{0, 1, 2, 3};
    do {
      std::vector<CandidateId> order;
      for (int p : perm) order.emplace_back(p);
      const Axis axis(order);
      ASSERT_EQ(check_single_peaked_axis(e, axis), verify::naive_single_peaked(e, axis));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(SinglePeaked, BruteforceFindsSomething) {
  EXPECT_TRUE(find_single_peaked_axis_bruteforce(test::letters({"ab", "ba"})).has_value());
  const Election one = test::letters({"dbca"});
  const auto axis = find_single_peaked_axis_bruteforce(one);
  ASSERT_TRUE(axis.has_value());
  EXPECT_TRUE(verify::naive_single_peaked(one, *axis));
  EXPECT_THROW(find_single_peaked_axis_bruteforce(gen_example_sp(3)), SizeLimit);
}

TEST(SinglePeaked, NarcissisticSingleCrossingProfilesHaveAnAxis) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int m = 2 + seed % 5;
    const Election e = gen_random_sc_narcissistic(m, m + seed % 4, 60 + seed);
    const auto axis = find_single_peaked_axis_bruteforce(e);
    ASSERT_TRUE(axis.has_value()) << "seed " << seed;
    EXPECT_TRUE(verify::naive_single_peaked(e, *axis));
  }
}

TEST(ClonePartition, Verification) {
  const Election e = gen_example_sc_gap(2, 1);
  EXPECT_TRUE(verify_clone_partition(e, ClonePartition::singletons(e.m())));
  EXPECT_TRUE(verify_clone_partition(e, ClonePartition::whole(e.m())));
  // c1 c2 | a1 a2 | b1 b2
  const ClonePartition split{{test::ids({0, 1}), test::ids({2, 3}), test::ids({4, 5})}};
  EXPECT_FALSE(verify_clone_partition(e, split));
  const ClonePartition overlap{{test::ids({0, 1}), test::ids({1, 2, 3, 4, 5})}};
  EXPECT_THROW(verify_clone_partition(e, overlap), InvalidInput);
}

TEST(Contract, SingletonsAndWhole) {
  const Election e = gen_example_narcissistic_util();
  EXPECT_EQ(contract_clones(e, ClonePartition::singletons(e.m())).m(), e.m());
  const Election one = contract_clones(e, ClonePartition::whole(e.m()));
  EXPECT_EQ(one.m(), 1);
  EXPECT_EQ(one.n(), e.n());
}

TEST(Contract, ClonedPairsContractBack) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Election base = gen_random_single_crossing(3, 5, seed);
    const ClonedInstance ci = gen_cloned_pairs(base, seed);
    ASSERT_TRUE(verify_clone_partition(ci.election, ci.partition));
    const Election back = contract_clones(ci.election, ci.partition);
    EXPECT_TRUE(check_single_crossing(back));
    ASSERT_EQ(back.m(), base.m());
    for (int v = 0; v < base.n(); ++v) {
      for (int c = 0; c < base.m(); ++c) {
        EXPECT_EQ(back.position(v, CandidateId(c)), base.position(v, CandidateId(c)));
      }
    }
  }
}

TEST(Width, SimpleCases) {
  EXPECT_EQ(compute_width_bruteforce(gen_example_narcissistic_util()).width, 1);
  EXPECT_EQ(compute_width_bruteforce(test::letters({"a"})).width, 1);
}

TEST(Width, InterleavedPairsGiveTwo) {
  // Base a>b then b>a; a's clone a' flips inside the pair twice.
  const Election e({"a", "a'", "b"},
                   {PreferenceOrder::from_indices(std::vector<int>{0, 1, 2}),
                    PreferenceOrder::from_indices(std::vector<int>{1, 0, 2}),
                    PreferenceOrder::from_indices(std::vector<int>{2, 0, 1})});
  ASSERT_FALSE(check_single_crossing(e));
  const WidthResult w = compute_width_bruteforce(e);
  EXPECT_EQ(w.width, 2);
  EXPECT_TRUE(check_single_crossing(contract_clones(e, w.partition)));
}

}  // namespace
}  // namespace fpr
