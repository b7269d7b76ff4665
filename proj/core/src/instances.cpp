#include "fpr/instances.hpp"

#include <string>

#include "fpr/error.hpp"
#include "fpr/rng.hpp"

namespace fpr {

namespace {

std::vector<int> range(int first, int count) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

std::vector<int> reversed(std::vector<int> v) {
  return {v.rbegin(), v.rend()};
}

PreferenceOrder vote(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return PreferenceOrder::from_indices(all);
}

PreferenceOrder vote_from_string(const std::string& letters) {
  std::vector<int> ids;
  for (char ch : letters) ids.push_back(ch - 'a');
  return PreferenceOrder::from_indices(ids);
}

}  // namespace

Election gen_example_sc_gap(int m, int n) {
  if (m < 1 || n < 1) throw InvalidInput("example needs m, n >= 1");
  std::vector<std::string> names = {"c1", "c2"};
  for (int i = 1; i <= m; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("b" + std::to_string(i));
  const std::vector<int> c1 = {0};
  const std::vector<int> c2 = {1};
  const std::vector<int> a = range(2, m);
  const std::vector<int> b = range(2 + m, m);
  const PreferenceOrder templates[] = {
      vote({c1, b, c2, a}),
      vote({c1, c2, reversed(b), a}),
      vote({c1, c2, a, reversed(b)}),
      vote({c1, reversed(a), c2, reversed(b)}),
  };
  std::vector<PreferenceOrder> voters;
  for (const PreferenceOrder& t : templates) voters.insert(voters.end(), n, t);
  return Election(std::move(names), std::move(voters));
}

Election gen_example_narcissistic_util() {
  const char* rows[] = {"abcdef", "bacdef", "bcadef", "cbadef",
                        "cbadef", "cbadef", "cbdaef", "cdbaef",
                        "defcba", "efdcba", "efdcba", "fedcba"};
  std::vector<PreferenceOrder> voters;
  for (const char* r : rows) voters.push_back(vote_from_string(r));
  return Election({"a", "b", "c", "d", "e", "f"}, std::move(voters));
}

Election gen_example_sp(int m) {
  if (m < 1) throw InvalidInput("example needs m >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
  for (const char* s : {"a", "b", "c", "d"}) names.emplace_back(s);
  const std::vector<int> x = range(0, m);
  const std::vector<int> y = range(m, m);
  const std::vector<int> a = {2 * m}, b = {2 * m + 1}, c = {2 * m + 2},
                         d = {2 * m + 3};
  std::vector<PreferenceOrder> voters = {
      vote({a, x, b, c, d, y}),
      vote({b, c, d, y, a, x}),
      vote({c, b, a, x, d, y}),
      vote({d, y, c, b, a, x}),
  };
  return Election(std::move(names), std::move(voters));
}

Axis example_sp_axis(int m) {
  if (m < 1) throw InvalidInput("example needs m >= 1");
  std::vector<CandidateId> order;
  for (int i = m - 1; i >= 0; --i) order.emplace_back(i);
  for (int i = 0; i < 4; ++i) order.emplace_back(2 * m + i);
  for (int i = 0; i < m; ++i) order.emplace_back(m + i);
  return Axis(std::move(order));
}

Election gen_random_single_crossing(int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 1) throw InvalidInput("random profile needs m, n >= 1");
  SplitMix64 rng(seed);
  std::vector<int> current = range(0, m);
  rng.shuffle(current);
  std::vector<int> first_rank(m);
  for (int p = 0; p < m; ++p) first_rank[current[p]] = p;

  // Spread roughly all m(m-1)/2 available inversions over the n-1 steps.
  const std::uint64_t pairs = static_cast<std::uint64_t>(m) * (m - 1) / 2;
  const std::uint64_t max_step = n > 1 ? 2 * pairs / (n - 1) + 1 : 0;

  std::vector<PreferenceOrder> voters;
  voters.push_back(PreferenceOrder::from_indices(current));
  std::vector<int> eligible;
  for (int v = 1; v < n; ++v) {
    for (std::uint64_t s = rng.below(max_step + 1); s > 0; --s) {
      // Adjacent pairs still in voter 0's relative order were never swapped.
      eligible.clear();
      for (int p = 0; p + 1 < m; ++p) {
        if (first_rank[current[p]] < first_rank[current[p + 1]]) {
          eligible.push_back(p);
        }
      }
      if (eligible.empty()) break;
      const int p = eligible[rng.below(eligible.size())];
      std::swap(current[p], current[p + 1]);
    }
    voters.push_back(PreferenceOrder::from_indices(current));
  }
  return Election(std::move(voters));
}

Election gen_random_sc_narcissistic(int m, int n, std::uint64_t seed) {
  if (m < 1) throw InvalidInput("random profile needs m >= 1");
  if (n < m) {
    throw InvalidInput("a narcissistic profile needs n >= m (got n = " +
                       std::to_string(n) + ", m = " + std::to_string(m) + ")");
  }
  SplitMix64 rng(seed);
  std::vector<int> order = range(0, m);
  rng.shuffle(order);
  std::vector<int> copies(m, 1);
  for (int extra = n - m; extra > 0; --extra) ++copies[rng.below(m)];

  std::vector<PreferenceOrder> voters;
  for (int i = 0; i < m; ++i) {
    // Rotation at order[i]: order[i..m-1] followed by order[i-1..0].
    std::vector<int> rotated(order.begin() + i, order.end());
    for (int j = i - 1; j >= 0; --j) rotated.push_back(order[j]);
    voters.insert(voters.end(), copies[i], PreferenceOrder::from_indices(rotated));
  }
  return Election(std::move(voters));
}

ClonedInstance gen_cloned_pairs(const Election& base, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int mb = base.m();
  std::vector<bool> cloned(mb, false);
  bool any = false;
  for (int c = 0; c < mb; ++c) any |= (cloned[c] = rng.coin());
  if (!any) cloned[rng.below(mb)] = true;

  std::vector<std::string> names(base.names().begin(), base.names().end());
  std::vector<int> clone_of(mb, -1);
  for (int c = 0; c < mb; ++c) {
    if (!cloned[c]) continue;
    clone_of[c] = static_cast<int>(names.size());
    names.push_back(base.name(CandidateId(c)) + "'");
  }

  std::vector<PreferenceOrder> voters;
  for (int v = 0; v < base.n(); ++v) {
    std::vector<int> ranking;
    for (CandidateId c : base.voter(v).ranking()) {
      const int twin = clone_of[c.index()];
      if (twin < 0) {
        ranking.push_back(c.index());
      } else if (rng.coin()) {
        ranking.insert(ranking.end(), {c.index(), twin});
      } else {
        ranking.insert(ranking.end(), {twin, c.index()});
      }
    }
    voters.push_back(PreferenceOrder::from_indices(ranking));
  }

  ClonePartition partition;
  for (int c = 0; c < mb; ++c) {
    if (clone_of[c] < 0) {
      partition.sets.push_back({CandidateId(c)});
    } else {
      partition.sets.push_back({CandidateId(c), CandidateId(clone_of[c])});
    }
  }
  return {Election(std::move(names), std::move(voters)), std::move(partition)};
}

}  // namespace fpr
