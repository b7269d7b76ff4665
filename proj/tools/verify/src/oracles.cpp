#include "fpr/verify/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "fpr/rng.hpp"

namespace fpr::verify {

namespace {
constexpr Objective kNone = std::numeric_limits<Objective>::max();
}

std::int64_t naive_kendall_tau(const PreferenceOrder& a, const PreferenceOrder& b) {
  std::int64_t d = 0;
  for (int x = 0; x < a.size(); ++x) {
    for (int y = x + 1; y < a.size(); ++y) {
      const CandidateId cx(x), cy(y);
      if (a.prefers(cx, cy) != b.prefers(cx, cy)) ++d;
    }
  }
  return d;
}

bool naive_single_crossing(const Election& election) {
  for (int x = 0; x < election.m(); ++x) {
    for (int y = 0; y < election.m(); ++y) {
      if (x == y) continue;
      const CandidateId cx(x), cy(y);
      if (!election.voter(0).prefers(cx, cy)) continue;
      bool flipped = false;
      for (int v = 0; v < election.n(); ++v) {
        const bool keeps = election.voter(v).prefers(cx, cy);
        if (!keeps) flipped = true;
        if (keeps && flipped) return false;
      }
    }
  }
  return true;
}

bool naive_single_peaked(const Election& election, const Axis& axis) {
  const int m = election.m();
  for (int v = 0; v < election.n(); ++v) {
    const int peak = axis.location(election.voter(v).top());
    for (int l = peak; l + 1 < m; ++l) {
      if (election.position(v, axis.order()[l]) >
          election.position(v, axis.order()[l + 1])) {
        return false;
      }
    }
    for (int l = peak; l > 0; --l) {
      if (election.position(v, axis.order()[l]) >
          election.position(v, axis.order()[l - 1])) {
        return false;
      }
    }
  }
  return true;
}

Objective exhaustive_cc(const Election& election, int k,
                        const DissatisfactionFunction& alpha, Aggregator agg) {
  const int m = election.m();
  if (m > 20) throw std::invalid_argument("exhaustive_cc: m too large");
  Objective best = kNone;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    if (std::popcount(mask) > k) continue;
    Objective total = 0;
    for (int v = 0; v < election.n(); ++v) {
      Objective mine = kNone;
      for (int c = 0; c < m; ++c) {
        if (mask >> c & 1u) {
          mine = std::min(mine, alpha(election.position(v, CandidateId(c))));
        }
      }
      total = agg == Aggregator::kSum ? total + mine : std::max(total, mine);
    }
    best = std::min(best, total);
  }
  return best;
}

std::optional<Objective> exhaustive_balanced(const Election& election,
                                             std::span<const CandidateId> committee,
                                             const DissatisfactionFunction& alpha,
                                             Aggregator agg) {
  const int n = election.n();
  const int k = static_cast<int>(committee.size());
  const int lo = n / k;
  const int hi = (n + k - 1) / k;
  std::vector<int> choice(n, 0);
  std::vector<int> load(k, 0);
  Objective best = kNone;
  // Odometer over all k^n maps.
  while (true) {
    std::fill(load.begin(), load.end(), 0);
    for (int v = 0; v < n; ++v) ++load[choice[v]];
    bool balanced = true;
    for (int c = 0; c < k; ++c) balanced &= load[c] >= lo && load[c] <= hi;
    if (balanced) {
      Objective total = 0;
      for (int v = 0; v < n; ++v) {
        const Objective a = alpha(election.position(v, committee[choice[v]]));
        total = agg == Aggregator::kSum ? total + a : std::max(total, a);
      }
      best = std::min(best, total);
    }
    int v = 0;
    while (v < n && ++choice[v] == k) choice[v++] = 0;
    if (v == n) break;
  }
  if (best == kNone) return std::nullopt;
  return best;
}

Objective exhaustive_monroe(const Election& election, int k,
                            const DissatisfactionFunction& alpha, Aggregator agg) {
  const int m = election.m();
  if (m > 20) throw std::invalid_argument("exhaustive_monroe: m too large");
  Objective best = kNone;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<CandidateId> committee;
    for (int c = 0; c < m; ++c) {
      if (mask >> c & 1u) committee.emplace_back(c);
    }
    if (auto got = exhaustive_balanced(election, committee, alpha, agg)) {
      best = std::min(best, *got);
    }
  }
  return best;
}

Objective lowest(const Election& election, CandidateId c, int size,
                 const DissatisfactionFunction& alpha) {
  std::vector<Objective> costs;
  for (int v = 0; v < election.n(); ++v) {
    costs.push_back(alpha(election.position(v, c)));
  }
  std::sort(costs.begin(), costs.end());
  Objective total = 0;
  for (int i = 0; i < size; ++i) total += costs[i];
  return total;
}

Election random_election(int m, int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<PreferenceOrder> voters;
  std::vector<int> ranking(m);
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < m; ++c) ranking[c] = c;
    rng.shuffle(ranking);
    voters.push_back(PreferenceOrder::from_indices(ranking));
  }
  return Election(std::move(voters));
}

}  // namespace fpr::verify
