#include "fpr/domains.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "fpr/error.hpp"

namespace fpr {

namespace {

std::int64_t count_inversions(std::vector<int>& a, std::vector<int>& scratch,
                              std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t inv = count_inversions(a, scratch, lo, mid) +
                     count_inversions(a, scratch, mid, hi);
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      inv += static_cast<std::int64_t>(mid - i);
      scratch[out++] = a[j++];
    } else {
      scratch[out++] = a[i++];
    }
  }
  while (i < mid) scratch[out++] = a[i++];
  while (j < hi) scratch[out++] = a[j++];
  std::copy(scratch.begin() + lo, scratch.begin() + hi, a.begin() + lo);
  return inv;
}

}  // namespace

std::int64_t kendall_tau_distance(const PreferenceOrder& a,
                                  const PreferenceOrder& b) {
  if (a.size() != b.size()) {
    throw InvalidInput("kendall_tau_distance: orders have different sizes");
  }
  std::vector<int> seq(b.size());
  for (int p = 0; p < b.size(); ++p) seq[p] = a.position(b.ranking()[p]);
  std::vector<int> scratch(seq.size());
  return count_inversions(seq, scratch, 0, seq.size());
}

bool check_single_crossing(const Election& election) {
  const PreferenceOrder& first = election.voter(0);
  std::int64_t from_first = 0;
  for (int i = 0; i + 1 < election.n(); ++i) {
    const PreferenceOrder& cur = election.voter(i);
    const PreferenceOrder& next = election.voter(i + 1);
    if (cur == next) continue;
    const std::int64_t step = kendall_tau_distance(cur, next);
    const std::int64_t to_next = kendall_tau_distance(first, next);
    if (to_next != from_first + step) return false;
    from_first = to_next;
  }
  return true;
}

std::optional<std::vector<int>> find_single_crossing_order(
    const Election& election) {
  const int n = election.n();
  // Identical votes share the index of their first occurrence.
  std::vector<int> group(n);
  {
    std::map<std::vector<CandidateId>, int> first_seen;
    for (int i = 0; i < n; ++i) {
      const auto r = election.voter(i).ranking();
      auto [it, inserted] =
          first_seen.emplace(std::vector<CandidateId>(r.begin(), r.end()), i);
      group[i] = it->second;
    }
  }
  std::vector<std::int64_t> dist(n);
  for (int u = 0; u < n; ++u) {
    if (group[u] != u) continue;  // same candidate end voter as before
    for (int v = 0; v < n; ++v) {
      dist[v] = kendall_tau_distance(election.voter(u), election.voter(v));
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      if (dist[a] != dist[b]) return dist[a] < dist[b];
      if (group[a] != group[b]) return group[a] < group[b];
      return a < b;
    });
    if (check_single_crossing(election.reordered(perm))) return perm;
  }
  return std::nullopt;
}

bool check_narcissistic(const Election& election) {
  std::vector<char> top(election.m(), 0);
  for (const PreferenceOrder& v : election.voters()) top[v.top().index()] = 1;
  return std::all_of(top.begin(), top.end(), [](char t) { return t != 0; });
}

Axis::Axis(std::vector<CandidateId> order)
    : order_(std::move(order)), location_(order_.size(), -1) {
  const int m = size();
  for (int p = 0; p < m; ++p) {
    const int c = order_[p].index();
    if (c < 0 || c >= m || location_[c] != -1) {
      throw InvalidInput("axis is not a permutation of the candidates");
    }
    location_[c] = p;
  }
}

Axis Axis::reversed() const {
  return Axis(std::vector<CandidateId>(order_.rbegin(), order_.rend()));
}

bool check_single_peaked_axis(const Election& election, const Axis& axis) {
  if (axis.size() != election.m()) {
    throw InvalidInput("axis has " + std::to_string(axis.size()) +
                       " candidates, election has " +
                       std::to_string(election.m()));
  }
  for (const PreferenceOrder& v : election.voters()) {
    const auto r = v.ranking();
    int left = axis.location(r[0]);
    int right = left;
    for (std::size_t p = 1; p < r.size(); ++p) {
      const int loc = axis.location(r[p]);
      if (loc == left - 1) {
        left = loc;
      } else if (loc == right + 1) {
        right = loc;
      } else {
        return false;
      }
    }
  }
  return true;
}

namespace {

void check_axis_budget(const Election& election, int max_m) {
  if (election.m() > max_m) {
    throw SizeLimit("single-peaked axis search limited to m <= " +
                    std::to_string(max_m) + ", got m = " +
                    std::to_string(election.m()));
  }
}

template <typename Visit>
void for_each_axis(int m, Visit&& visit) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<CandidateId> order;
    order.reserve(m);
    for (int c : perm) order.emplace_back(c);
    if (!visit(Axis(std::move(order)))) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::optional<Axis> find_single_peaked_axis_bruteforce(const Election& election,
                                                       int max_m) {
  check_axis_budget(election, max_m);
  std::optional<Axis> found;
  for_each_axis(election.m(), [&](Axis axis) {
    if (check_single_peaked_axis(election, axis)) {
      found = std::move(axis);
      return false;
    }
    return true;
  });
  return found;
}

std::vector<Axis> all_single_peaked_axes_bruteforce(const Election& election,
                                                    int max_m) {
  check_axis_budget(election, max_m);
  std::vector<Axis> axes;
  for_each_axis(election.m(), [&](Axis axis) {
    if (check_single_peaked_axis(election, axis)) axes.push_back(std::move(axis));
    return true;
  });
  return axes;
}

std::vector<int> order_voters_by_axis(const Election& election,
                                      const Axis& axis) {
  if (axis.size() != election.m()) {
    throw InvalidInput("axis does not match the election's candidates");
  }
  std::vector<std::vector<int>> keys(election.n());
  for (int i = 0; i < election.n(); ++i) {
    for (CandidateId c : election.voter(i).ranking()) {
      keys[i].push_back(axis.location(c));
    }
  }
  std::vector<int> perm(election.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return keys[a] < keys[b]; });
  return perm;
}

int ClonePartition::width() const {
  std::size_t w = 0;
  for (const auto& s : sets) w = std::max(w, s.size());
  return static_cast<int>(w);
}

ClonePartition ClonePartition::singletons(int m) {
  ClonePartition p;
  for (int c = 0; c < m; ++c) p.sets.push_back({CandidateId(c)});
  return p;
}

ClonePartition ClonePartition::whole(int m) {
  ClonePartition p;
  p.sets.emplace_back();
  for (int c = 0; c < m; ++c) p.sets.back().emplace_back(c);
  return p;
}

namespace {

// Index of the set containing each candidate; throws on overlap or gaps.
std::vector<int> set_of_candidate(const Election& election,
                                  const ClonePartition& partition) {
  std::vector<int> owner(election.m(), -1);
  for (std::size_t s = 0; s < partition.sets.size(); ++s) {
    if (partition.sets[s].empty()) {
      throw InvalidInput("clone partition contains an empty set");
    }
    for (CandidateId c : partition.sets[s]) {
      if (c.index() < 0 || c.index() >= election.m()) {
        throw InvalidInput("clone partition names unknown candidate " +
                           std::to_string(c.index()));
      }
      if (owner[c.index()] != -1) {
        throw InvalidInput("clone partition sets overlap at candidate " +
                           election.name(c));
      }
      owner[c.index()] = static_cast<int>(s);
    }
  }
  for (int c = 0; c < election.m(); ++c) {
    if (owner[c] == -1) {
      throw InvalidInput("clone partition does not cover candidate " +
                         election.name(CandidateId(c)));
    }
  }
  return owner;
}

bool is_clone_partition(const Election& election,
                        const std::vector<int>& owner, std::size_t num_sets) {
  // Every set must appear as a single run in every vote.
  std::vector<int> last_run(num_sets);
  for (int i = 0; i < election.n(); ++i) {
    std::fill(last_run.begin(), last_run.end(), -1);
    const auto r = election.voter(i).ranking();
    for (std::size_t p = 0; p < r.size(); ++p) {
      const int s = owner[r[p].index()];
      if (last_run[s] != -1 && last_run[s] != static_cast<int>(p) - 1) {
        return false;
      }
      last_run[s] = static_cast<int>(p);
    }
  }
  return true;
}

Election contract_unchecked(const Election& election,
                            const std::vector<int>& owner,
                            const ClonePartition& partition) {
  const std::size_t s = partition.sets.size();
  std::vector<std::string> names;
  names.reserve(s);
  for (const auto& set : partition.sets) {
    std::string name = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) name += ',';
      name += election.name(set[i]);
    }
    names.push_back(name + "}");
  }
  std::vector<PreferenceOrder> voters;
  voters.reserve(election.n());
  for (int i = 0; i < election.n(); ++i) {
    std::vector<CandidateId> order;
    order.reserve(s);
    int prev = -1;
    for (CandidateId c : election.voter(i).ranking()) {
      const int set = owner[c.index()];
      if (set != prev) order.emplace_back(set);
      prev = set;
    }
    voters.emplace_back(std::move(order));
  }
  return Election(std::move(names), std::move(voters));
}

}  // namespace

bool verify_clone_partition(const Election& election,
                            const ClonePartition& partition) {
  const std::vector<int> owner = set_of_candidate(election, partition);
  return is_clone_partition(election, owner, partition.sets.size());
}

ClonePartition normalize_partition(const Election& election,
                                   const ClonePartition& partition) {
  ClonePartition out = partition;
  const PreferenceOrder& first = election.voter(0);
  for (auto& set : out.sets) {
    std::sort(set.begin(), set.end(), [&](CandidateId a, CandidateId b) {
      return first.prefers(a, b);
    });
  }
  std::sort(out.sets.begin(), out.sets.end(),
            [&](const auto& a, const auto& b) {
              return first.prefers(a.front(), b.front());
            });
  return out;
}

Election contract_clones(const Election& election,
                         const ClonePartition& partition) {
  const std::vector<int> owner = set_of_candidate(election, partition);
  if (!is_clone_partition(election, owner, partition.sets.size())) {
    throw InvalidInput("partition sets are not clone sets of the election");
  }
  return contract_unchecked(election, owner, partition);
}

WidthResult compute_width_bruteforce(const Election& election, int max_m) {
  const int m = election.m();
  if (m > max_m) {
    throw SizeLimit("width search limited to m <= " + std::to_string(max_m) +
                    ", got m = " + std::to_string(m));
  }
  const auto first = election.voter(0).ranking();
  // A clone set is consecutive in voter 0's vote, so candidate partitions are
  // compositions of that ranking; bit p of `cuts` splits after position p.
  const std::uint32_t num_masks = 1u << (m - 1);
  for (int w = 1; w <= m; ++w) {
    for (std::uint32_t cuts = 0; cuts < num_masks; ++cuts) {
      ClonePartition partition;
      partition.sets.emplace_back();
      bool too_wide = false;
      for (int p = 0; p < m; ++p) {
        partition.sets.back().push_back(first[p]);
        if (static_cast<int>(partition.sets.back().size()) > w) {
          too_wide = true;
          break;
        }
        if (p + 1 < m && (cuts >> p & 1u)) partition.sets.emplace_back();
      }
      if (too_wide || partition.width() != w) continue;
      const std::vector<int> owner = set_of_candidate(election, partition);
      if (!is_clone_partition(election, owner, partition.sets.size())) continue;
      if (check_single_crossing(contract_unchecked(election, owner, partition))) {
        return {w, std::move(partition)};
      }
    }
  }
  // Unreachable: the single all-candidate set always qualifies.
  return {m, ClonePartition::whole(m)};
}

}  // namespace fpr
