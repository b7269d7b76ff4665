#include <gtest/gtest.h>

#include "fpr/domains.hpp"
#include "fpr/error.hpp"
#include "fpr/oracle.hpp"
#include "fpr/reduction.hpp"
#include "fpr/verify/oracles.hpp"
#include "helpers.hpp"

namespace fpr {
namespace {

TEST(Rotation, TwoCandidatesTwoCopies) {
  const Election r = build_rotation_profile(test::ids({0, 1}), 2);
  ASSERT_EQ(r.n(), 4);
  EXPECT_EQ(r.voter(0).top(), CandidateId(0));
  EXPECT_EQ(r.voter(1).top(), CandidateId(0));
  EXPECT_EQ(r.voter(2).top(), CandidateId(1));
  EXPECT_EQ(r.voter(3).top(), CandidateId(1));
  EXPECT_TRUE(check_single_crossing(r));
  EXPECT_TRUE(check_narcissistic(r));
}

TEST(Rotation, ThreeCandidatesOneCopy) {
  const Election r = build_rotation_profile(test::ids({0, 1, 2}), 1);
  EXPECT_EQ(r.voter(0), PreferenceOrder::from_indices(std::vector<int>{0, 1, 2}));
  EXPECT_EQ(r.voter(1), PreferenceOrder::from_indices(std::vector<int>{1, 2, 0}));
  // suffix from c_i, then the skipped prefix in reverse
  EXPECT_EQ(r.voter(2), PreferenceOrder::from_indices(std::vector<int>{2, 1, 0}));
  EXPECT_TRUE(check_single_crossing(r));
}

TEST(Rotation, SingleCandidateAndEmpty) {
  const Election r = build_rotation_profile(test::ids({0}), 3);
  EXPECT_EQ(r.n(), 3);
  EXPECT_THROW(build_rotation_profile({}, 1), InvalidInput);
}

TEST(Rotation, InverseIsReversal) {
  EXPECT_EQ(rotation_inverse(test::ids({0, 1, 2})), test::ids({2, 1, 0}));
  EXPECT_EQ(rotation_inverse(test::ids({4})), test::ids({4}));
}

std::vector<std::string> names(int count, char prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

TEST(Adjustment, TargetAtFixedPosition) {
  const Election src = test::letters({"ba", "ba"});
  const auto a = names(4, 'a'), b = names(4, 'b');
  const Election adj = build_adjustment_profile(src, CandidateId(0), a, b);
  for (int v = 1; v < adj.n(); ++v) EXPECT_EQ(adj.voter(v), adj.voter(0));
  EXPECT_EQ(adj.position(0, CandidateId(8)), 4 + 2);
}

TEST(Adjustment, PositionsShiftByMn) {
  const Election src = test::letters({"ab", "ba"});
  const auto a = names(4, 'a'), b = names(4, 'b');
  const Election adj = build_adjustment_profile(src, CandidateId(0), a, b);
  ASSERT_EQ(adj.m(), 9);
  EXPECT_EQ(adj.position(0, CandidateId(8)), 5);
  EXPECT_EQ(adj.position(1, CandidateId(8)), 6);
  EXPECT_TRUE(check_single_crossing(adj));
  EXPECT_THROW(build_adjustment_profile(src, CandidateId(0), names(3, 'a'), b), InvalidInput);
}

TEST(Adjustment, RandomSourcesAreSingleCrossing) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Election src = verify::random_election(3, 4, seed);
    const Election adj = build_adjustment_profile(src, CandidateId(seed % 3), names(12, 'a'),
                                                  names(12, 'b'));
    EXPECT_TRUE(check_single_crossing(adj));
    for (int v = 0; v < src.n(); ++v) {
      EXPECT_EQ(adj.position(v, CandidateId(24)), 12 + src.position(v, CandidateId(seed % 3)));
    }
  }
}

TEST(ReductionSizes, SmallestInstance) {
  const ReductionSizes s = reduction_sizes(2, 2, 1);
  EXPECT_EQ(s.h, 1);
  EXPECT_EQ(s.f, 4);
  EXPECT_EQ(s.e_sets, (std::vector<std::int64_t>{36, 18}));
  EXPECT_EQ(s.e, 10);
  EXPECT_EQ(s.g_sets, 4);
  EXPECT_EQ(s.g, 18);
  EXPECT_EQ(s.c_prime, 2);
  EXPECT_EQ(s.candidates(), 155);
  EXPECT_EQ(s.v1, 2);
  EXPECT_EQ(s.v2, 216);
  EXPECT_EQ(s.v3, 2);
  EXPECT_EQ(s.v4, 2);
  EXPECT_EQ(s.v5, 240);
  EXPECT_EQ(s.voters(), 462);
}

TEST(ReductionSizes, RejectsBadParameters) {
  EXPECT_THROW(reduction_sizes(2, 3, 2), InvalidInput);  // k does not divide n
  EXPECT_THROW(reduction_sizes(2, 2, 3), InvalidInput);
  EXPECT_THROW(reduction_sizes(1 << 20, 1 << 20, 1), SizeLimit);
}

TEST(Reduction, BuildsSingleCrossingInstance) {
  for (auto [m, n, k] : {std::tuple{2, 2, 1}, std::tuple{2, 4, 2}, std::tuple{3, 3, 1}}) {
    const Election src = verify::random_election(m, n, 77 + m + n);
    const ReductionOutput red = build_monroe_reduction(src, k);
    EXPECT_TRUE(check_single_crossing(red.sc_election));
    EXPECT_EQ(red.sc_election.m(), red.sizes.candidates());
    EXPECT_EQ(red.sc_election.n(), red.sizes.voters());
    EXPECT_EQ(static_cast<std::int64_t>(red.k_sc) * (n / k + 1), red.sc_election.n());
    EXPECT_EQ(static_cast<int>(red.candidate_groups.size()), red.sc_election.m());
    EXPECT_EQ(static_cast<int>(red.voter_lists.size()), red.sc_election.n());
  }
}

TEST(Reduction, SmallestInstanceCounts) {
  const ReductionOutput red = build_monroe_reduction(verify::random_election(2, 2, 1), 1);
  EXPECT_EQ(red.sc_election.m(), 155);
  EXPECT_EQ(red.sc_election.n(), 462);
  EXPECT_EQ(red.k_sc, 154);
  int c_prime = 0;
  for (const auto& tag : red.candidate_groups) c_prime += tag.group == ReductionGroup::kCPrime;
  EXPECT_EQ(c_prime, 2);
}

TEST(Extraction, NoPrimeWinnerFails) {
  const ReductionOutput red = build_monroe_reduction(verify::random_election(2, 2, 1), 1);
  const CandidateId h(0);
  ASSERT_EQ(red.candidate_groups[0].group, ReductionGroup::kH);
  const Assignment all_h(std::vector<CandidateId>(red.sc_election.n(), h), red.k_sc);
  EXPECT_FALSE(extract_original_committee(red, all_h).ok);
}

}  // namespace
}  // namespace fpr
