#include "fpr/cc_solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

#include "fpr/error.hpp"

namespace fpr {

namespace {

constexpr Objective kInf = CcDpTable::kInfinity;

struct BlockCost {
  std::vector<Objective> cost;    // per voter
  std::vector<Objective> prefix;  // prefix[i] = cost[0] + ... + cost[i-1]
};

// One way of serving a block of consecutive voters from a group of
// candidates: the block is represented by `members`, each voter taking her
// favorite among them.
struct Option {
  std::vector<CandidateId> members;
  int seats = 1;
  std::optional<BlockCost> cost;  // built on first use
};

using Group = std::vector<Option>;

const BlockCost& block_cost(Option& option, const Election& election,
                            const std::vector<Objective>& alpha) {
  if (!option.cost) {
    BlockCost bc;
    const int n = election.n();
    bc.cost.resize(n);
    bc.prefix.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
      int best = election.m();
      for (CandidateId c : option.members) {
        best = std::min(best, election.position(v, c));
      }
      bc.cost[v] = alpha[best];
      bc.prefix[v + 1] = bc.prefix[v] + bc.cost[v];
    }
    option.cost = std::move(bc);
  }
  return *option.cost;
}

// out[i] = min(out[i], min over split < i of agg(prev[split], cost of voters
// split..i-1)), for i = 1..n. Each (i, split) pair is one O(1) transition.
void relax(const Objective* prev, const BlockCost& bc, Aggregator agg, int n,
           Objective* out, std::vector<Objective>& scratch) {
  if (agg == Aggregator::kSum) {
    scratch.resize(n);
    for (int s = 0; s < n; ++s) {
      scratch[s] = prev[s] >= kInf ? kInf : prev[s] - bc.prefix[s];
    }
    const Objective* shifted = scratch.data();
    for (int i = 1; i <= n; ++i) {
      Objective best = kInf;
      for (int s = 0; s < i; ++s) best = std::min(best, shifted[s]);
      if (best < kInf) out[i] = std::min(out[i], best + bc.prefix[i]);
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      Objective window = 0;
      Objective best = kInf;
      for (int s = i - 1; s >= 0; --s) {
        window = std::max(window, bc.cost[s]);
        best = std::min(best, std::max(prev[s], window));
      }
      out[i] = std::min(out[i], best);
    }
  }
}

void fill_table(CcDpTable& table, std::vector<Group>& groups,
                const Election& election, const std::vector<Objective>& alpha,
                Aggregator agg) {
  const int n = table.n();
  const int k = table.k();
  for (int t = 0; t <= k; ++t) table.at(0, 0, t) = 0;
  std::vector<Objective> scratch;
  for (int j = 1; j <= table.m(); ++j) {
    Group& group = groups[j - 1];
    for (int t = 0; t <= k; ++t) {
      Objective* col = table.column(j, t);
      const Objective* skip = table.column(j - 1, t);
      std::copy(skip, skip + n + 1, col);
      for (Option& option : group) {
        if (option.seats > t) continue;
        relax(table.column(j - 1, t - option.seats),
              block_cost(option, election, alpha), agg, n, col, scratch);
      }
    }
  }
}

Objective block_value(const Objective* prev, const BlockCost& bc,
                      Aggregator agg, int split, int end) {
  if (prev[split] >= kInf) return kInf;
  if (agg == Aggregator::kSum) {
    return prev[split] + bc.prefix[end] - bc.prefix[split];
  }
  Objective window = 0;
  for (int v = split; v < end; ++v) window = std::max(window, bc.cost[v]);
  return std::max(prev[split], window);
}

// Walks the table back from (n, groups, k). Ties prefer leaving the group
// unused, then the earlier option, then the smallest split.
std::vector<CandidateId> trace_back(const CcDpTable& table,
                                    std::vector<Group>& groups,
                                    const Election& election,
                                    const std::vector<Objective>& alpha,
                                    Aggregator agg) {
  std::vector<CandidateId> reps(table.n());
  int i = table.n();
  int j = table.m();
  int t = table.k();
  while (i > 0) {
    if (j == 0) throw std::logic_error("CC trace-back ran out of candidates");
    const Objective target = table.value(i, j, t);
    if (target == table.value(i, j - 1, t)) {
      --j;
      continue;
    }
    bool found = false;
    for (Option& option : groups[j - 1]) {
      if (option.seats > t) continue;
      const BlockCost& bc = block_cost(option, election, alpha);
      const Objective* prev = table.column(j - 1, t - option.seats);
      for (int split = 0; split < i && !found; ++split) {
        if (block_value(prev, bc, agg, split, i) != target) continue;
        const std::vector<CandidateId> fav =
            favorite_members(election, option.members);
        for (int v = split; v < i; ++v) reps[v] = fav[v];
        i = split;
        t -= option.seats;
        found = true;
      }
      if (found) break;
    }
    if (!found) throw std::logic_error("CC trace-back found no transition");
    --j;
  }
  return reps;
}

void check_k(const Election& election, int k) {
  if (k < 1 || k > election.m()) {
    throw InvalidInput("k = " + std::to_string(k) + " outside [1, " +
                       std::to_string(election.m()) + "]");
  }
}

std::vector<Group> singleton_groups(const Election& election) {
  std::vector<Group> groups;
  for (CandidateId c : first_voter_order(election)) {
    groups.push_back({Option{{c}, 1, std::nullopt}});
  }
  return groups;
}

SolveResult finish(const Election& election, const CcDpTable& table,
                   std::vector<Group>& groups,
                   const DissatisfactionFunction& alpha, Aggregator agg,
                   const std::vector<Objective>& alpha_table, std::string solver,
                   std::chrono::steady_clock::time_point start) {
  const Objective optimum = table.value(table.n(), table.m(), table.k());
  std::vector<CandidateId> reps =
      trace_back(table, groups, election, alpha_table, agg);
  // Re-serve every voter by her favorite committee member; on an optimal
  // assignment this cannot change the objective.
  const Assignment traced(reps, table.k());
  const std::vector<CandidateId> committee = traced.committee();
  Assignment normalized(favorite_members(election, committee), table.k());
  const Objective objective = score(election, normalized, alpha, agg);
  if (objective != optimum) {
    throw std::logic_error("CC solver: recomputed objective " +
                           std::to_string(objective) + " != table optimum " +
                           std::to_string(optimum));
  }
  SolveResult result;
  result.assignment = std::move(normalized);
  result.objective = objective;
  result.rule = Rule::kCC;
  result.aggregator = agg;
  result.diagnostics.solver = std::move(solver);
  result.diagnostics.elapsed = std::chrono::steady_clock::now() - start;
  result.diagnostics.table_dims = {static_cast<std::size_t>(table.n() + 1),
                                   static_cast<std::size_t>(table.m() + 1),
                                   static_cast<std::size_t>(table.k() + 1)};
  return result;
}

}  // namespace

CcDpTable build_cc_table(const Election& election, int k,
                         const DissatisfactionFunction& alpha, Aggregator agg) {
  check_k(election, k);
  if (!check_single_crossing(election)) {
    throw DomainViolation("CC dynamic program needs a single-crossing profile");
  }
  const std::vector<Objective> alpha_table = alpha.table(election.m());
  std::vector<Group> groups = singleton_groups(election);
  CcDpTable table(election.n(), election.m(), k);
  fill_table(table, groups, election, alpha_table, agg);
  return table;
}

SolveResult solve_cc(const Election& election, int k,
                     const DissatisfactionFunction& alpha, Aggregator agg) {
  const auto start = std::chrono::steady_clock::now();
  check_k(election, k);
  if (!check_single_crossing(election)) {
    throw DomainViolation(
        "solve_cc needs a single-crossing voter order (try reordering voters "
        "first)");
  }
  const std::vector<Objective> alpha_table = alpha.table(election.m());
  std::vector<Group> groups = singleton_groups(election);
  CcDpTable table(election.n(), election.m(), k);
  fill_table(table, groups, election, alpha_table, agg);
  return finish(election, table, groups, alpha, agg, alpha_table,
                "cc-single-crossing-dp", start);
}

SolveResult solve_cc_width(const Election& election,
                           const ClonePartition& partition, int k,
                           const DissatisfactionFunction& alpha,
                           Aggregator agg) {
  const auto start = std::chrono::steady_clock::now();
  check_k(election, k);
  if (!verify_clone_partition(election, partition)) {
    throw InvalidInput("partition sets are not clone sets of the election");
  }
  const ClonePartition ordered = normalize_partition(election, partition);
  if (!check_single_crossing(contract_clones(election, ordered))) {
    throw DomainViolation(
        "contracting the clone partition does not give a single-crossing "
        "profile");
  }
  if (ordered.width() > 20) {
    throw SizeLimit("clone sets wider than 20 are not supported");
  }
  const std::vector<Objective> alpha_table = alpha.table(election.m());
  std::vector<Group> groups;
  for (const auto& set : ordered.sets) {
    Group group;
    const std::uint32_t full = (1u << set.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      Option option;
      for (std::size_t b = 0; b < set.size(); ++b) {
        if (mask >> b & 1u) option.members.push_back(set[b]);
      }
      option.seats = std::popcount(mask);
      group.push_back(std::move(option));
    }
    groups.push_back(std::move(group));
  }
  CcDpTable table(election.n(), static_cast<int>(groups.size()), k);
  fill_table(table, groups, election, alpha_table, agg);
  return finish(election, table, groups, alpha, agg, alpha_table,
                "cc-clone-width-dp", start);
}

}  // namespace fpr
