#include "fpr/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <thread>

#include "fpr/error.hpp"
#include "fpr/flow.hpp"

namespace fpr {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_saturating(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t add_saturating(std::uint64_t a, std::uint64_t b) {
  return b > kSaturated - a ? kSaturated : a + b;
}

std::uint64_t falling_factorial(int m, int k) {
  std::uint64_t p = 1;
  for (int i = 0; i < k; ++i) p = mul_saturating(p, static_cast<std::uint64_t>(m - i));
  return p;
}

// Advances c (strictly increasing values in [0, n)) to the next combination
// in lexicographic order; false after the last one.
bool next_combination(std::vector<int>& c, int n) {
  const int r = static_cast<int>(c.size());
  int i = r - 1;
  while (i >= 0 && c[i] == n - r + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
  return true;
}

std::vector<int> first_combination(int r) {
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = i;
  return c;
}

void check_budget(std::uint64_t needed, const OracleConfig& config,
                  const std::string& what) {
  if (needed > config.budget) {
    throw SizeLimit(what + " needs " +
                    (needed == kSaturated ? std::string("more than 2^64")
                                          : std::to_string(needed)) +
                    " steps, budget is " + std::to_string(config.budget) +
                    " (raise FPR_BUDGET)");
  }
}

struct Candidate {
  Objective objective = std::numeric_limits<Objective>::max();
  std::uint64_t index = kSaturated;
  Assignment assignment;
  bool found = false;
};

// Evaluates every size-k committee (in lexicographic order) on `threads`
// workers and keeps the minimum by (objective, committee index), so the result
// does not depend on scheduling.
template <typename Eval>
Candidate best_committee(int m, int k, const OracleConfig& config, Eval eval) {
  const int workers = std::max(1, config.threads);
  std::vector<Candidate> best(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int id) {
    try {
      std::vector<int> combo = first_combination(k);
      std::vector<CandidateId> committee(k);
      std::uint64_t index = 0;
      do {
        if (index % static_cast<std::uint64_t>(workers) ==
            static_cast<std::uint64_t>(id)) {
          for (int i = 0; i < k; ++i) committee[i] = CandidateId(combo[i]);
          std::optional<std::pair<Objective, Assignment>> got = eval(committee);
          if (got && got->first < best[id].objective) {
            best[id] = {got->first, index, std::move(got->second), true};
          }
        }
        ++index;
      } while (next_combination(combo, m));
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Candidate result;
  for (Candidate& c : best) {
    if (!c.found) continue;
    if (!result.found || c.objective < result.objective ||
        (c.objective == result.objective && c.index < result.index)) {
      result = std::move(c);
    }
  }
  return result;
}

void check_committee_k(const Election& election, int k, bool monroe) {
  const int limit = monroe ? std::min(election.m(), election.n()) : election.m();
  if (k < 1 || k > limit) {
    throw InvalidInput("k = " + std::to_string(k) + " outside [1, " +
                       std::to_string(limit) + "]");
  }
}

SolveResult make_result(Assignment assignment, Objective objective, Rule rule,
                        Aggregator agg, std::string solver,
                        std::chrono::steady_clock::time_point start) {
  SolveResult result;
  result.assignment = std::move(assignment);
  result.objective = objective;
  result.rule = rule;
  result.aggregator = agg;
  result.diagnostics.solver = std::move(solver);
  result.diagnostics.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

// Flow formulation over voter groups with identical cost vectors:
// source -> group (count) -> member (cost alpha) -> sink (floor(n/k)), plus
// member -> pool (1) -> sink (n mod k). A flow of value n saturates every
// sink arc, so each member serves floor(n/k) or ceil(n/k) voters.
struct BalancedFlow {
  std::vector<std::vector<Objective>> group_cost;  // [group][member]
  std::vector<std::vector<int>> group_voters;
};

BalancedFlow group_voters(const Election& election,
                          std::span<const CandidateId> committee,
                          const std::vector<Objective>& alpha_table) {
  BalancedFlow bf;
  std::map<std::vector<Objective>, int> ids;
  for (int v = 0; v < election.n(); ++v) {
    std::vector<Objective> costs;
    costs.reserve(committee.size());
    for (CandidateId c : committee) {
      costs.push_back(alpha_table[election.position(v, c)]);
    }
    auto [it, inserted] =
        ids.try_emplace(costs, static_cast<int>(bf.group_cost.size()));
    if (inserted) {
      bf.group_cost.push_back(std::move(costs));
      bf.group_voters.emplace_back();
    }
    bf.group_voters[it->second].push_back(v);
  }
  return bf;
}

struct BuiltNetwork {
  FlowNetwork net;
  int source;
  int sink;
  std::vector<std::vector<int>> arc;  // [group][member], -1 if absent
};

BuiltNetwork build_network(const BalancedFlow& bf, int n, int k,
                           Objective threshold) {
  const int groups = static_cast<int>(bf.group_cost.size());
  const int source = 0;
  const int first_group = 1;
  const int first_member = first_group + groups;
  const int pool = first_member + k;
  const int sink = pool + 1;
  BuiltNetwork b{FlowNetwork(sink + 1), source, sink, {}};
  b.arc.assign(groups, std::vector<int>(k, -1));
  for (int g = 0; g < groups; ++g) {
    const auto count = static_cast<std::int64_t>(bf.group_voters[g].size());
    b.net.add_arc(source, first_group + g, count);
    for (int c = 0; c < k; ++c) {
      if (bf.group_cost[g][c] > threshold) continue;
      b.arc[g][c] =
          b.net.add_arc(first_group + g, first_member + c, count, bf.group_cost[g][c]);
    }
  }
  for (int c = 0; c < k; ++c) {
    if (n / k > 0) b.net.add_arc(first_member + c, sink, n / k);
    if (n % k > 0) b.net.add_arc(first_member + c, pool, 1);
  }
  if (n % k > 0) b.net.add_arc(pool, sink, n % k);
  return b;
}

Assignment read_assignment(const BuiltNetwork& b, const BalancedFlow& bf,
                           std::span<const CandidateId> committee, int n, int k) {
  std::vector<CandidateId> reps(n);
  for (std::size_t g = 0; g < bf.group_voters.size(); ++g) {
    std::size_t next = 0;
    for (int c = 0; c < k; ++c) {
      if (b.arc[g][c] < 0) continue;
      for (std::int64_t f = b.net.flow(b.arc[g][c]); f > 0; --f) {
        reps[bf.group_voters[g][next++]] = committee[c];
      }
    }
  }
  return Assignment(std::move(reps), k);
}

}  // namespace

OracleConfig OracleConfig::from_env() {
  OracleConfig config;
  config.threads =
      std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  if (const char* b = std::getenv("FPR_BUDGET"); b && *b) {
    try {
      config.budget = std::stoull(b);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("FPR_BUDGET is not a number: ") + b);
    }
  }
  if (const char* t = std::getenv("FPR_THREADS"); t && *t) {
    try {
      config.threads = std::max(1, std::stoi(t));
    } catch (const std::exception&) {
      throw InvalidInput(std::string("FPR_THREADS is not a number: ") + t);
    }
  }
  return config;
}

std::uint64_t binomial_saturating(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  // C(n, i) = C(n, i-1) * a / i with a = n - r + i. After cancelling
  // g = gcd(a, i), i / g must divide C(n, i-1) because the result is integral.
  std::uint64_t value = 1;
  for (int i = 1; i <= r; ++i) {
    const auto a = static_cast<std::uint64_t>(n - r + i);
    const auto g = std::gcd(a, static_cast<std::uint64_t>(i));
    value = mul_saturating(value / (static_cast<std::uint64_t>(i) / g), a / g);
    if (value == kSaturated) return kSaturated;
  }
  return value;
}

SolveResult solve_cc_bruteforce(const Election& election, int k,
                                const DissatisfactionFunction& alpha,
                                Aggregator agg, const OracleConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  check_committee_k(election, k, false);
  check_budget(binomial_saturating(election.m(), k), config, "CC enumeration");
  const std::vector<Objective> table = alpha.table(election.m());
  Candidate best = best_committee(
      election.m(), k, config,
      [&](std::span<const CandidateId> committee)
          -> std::optional<std::pair<Objective, Assignment>> {
        Objective total = 0;
        std::vector<CandidateId> reps(election.n());
        for (int v = 0; v < election.n(); ++v) {
          CandidateId fav = committee[0];
          for (CandidateId c : committee) {
            if (election.position(v, c) < election.position(v, fav)) fav = c;
          }
          reps[v] = fav;
          total = aggregate(agg, total, table[election.position(v, fav)]);
        }
        return std::pair{total, Assignment(std::move(reps), k)};
      });
  return make_result(std::move(best.assignment), best.objective, Rule::kCC, agg,
                     "cc-bruteforce", start);
}

std::optional<Assignment> optimal_balanced_assignment(
    const Election& election, std::span<const CandidateId> committee, int k,
    const DissatisfactionFunction& alpha, Aggregator agg) {
  const int n = election.n();
  if (static_cast<int>(committee.size()) != k) {
    throw InvalidInput("committee has " + std::to_string(committee.size()) +
                       " members, expected k = " + std::to_string(k));
  }
  if (k < 1 || k > n) {
    throw InvalidInput("balanced assignment needs 1 <= k <= n");
  }
  std::vector<bool> seen(election.m(), false);
  for (CandidateId c : committee) {
    if (c.index() < 0 || c.index() >= election.m() || seen[c.index()]) {
      throw InvalidInput("committee members must be distinct candidates");
    }
    seen[c.index()] = true;
  }
  const std::vector<Objective> table = alpha.table(election.m());
  const BalancedFlow bf = group_voters(election, committee, table);

  Objective threshold = std::numeric_limits<Objective>::max();
  if (agg == Aggregator::kMax) {
    std::vector<Objective> values;
    for (const auto& row : bf.group_cost) values.insert(values.end(), row.begin(), row.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    // The largest value admits every arc, hence is always feasible.
    std::size_t lo = 0;
    std::size_t hi = values.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      BuiltNetwork b = build_network(bf, n, k, values[mid]);
      if (b.net.max_flow(b.source, b.sink) == n) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    threshold = values[lo];
  }
  BuiltNetwork b = build_network(bf, n, k, threshold);
  if (b.net.min_cost_flow(b.source, b.sink, n).flow != n) return std::nullopt;
  return read_assignment(b, bf, committee, n, k);
}

SolveResult solve_monroe_bruteforce(const Election& election, int k,
                                    const DissatisfactionFunction& alpha,
                                    Aggregator agg, const OracleConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  check_committee_k(election, k, true);
  check_budget(binomial_saturating(election.m(), k), config,
               "Monroe enumeration");
  alpha.table(election.m());  // validates custom lengths up front
  Candidate best = best_committee(
      election.m(), k, config,
      [&](std::span<const CandidateId> committee)
          -> std::optional<std::pair<Objective, Assignment>> {
        std::optional<Assignment> a =
            optimal_balanced_assignment(election, committee, k, alpha, agg);
        if (!a) return std::nullopt;
        const Objective obj = score(election, *a, alpha, agg);
        return std::pair{obj, std::move(*a)};
      });
  if (!best.found) throw std::logic_error("no balanced assignment exists");
  return make_result(std::move(best.assignment), best.objective, Rule::kMonroe,
                     agg, "monroe-bruteforce", start);
}

SolveResult best_contiguous_bruteforce(const Election& election, int k,
                                       const DissatisfactionFunction& alpha,
                                       Aggregator agg, Rule rule,
                                       const OracleConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const bool monroe = rule == Rule::kMonroe;
  check_committee_k(election, k, monroe);
  const int n = election.n();
  const int m = election.m();
  const std::vector<Objective> table = alpha.table(m);

  // Block structures as lists of interval lengths.
  std::vector<std::vector<int>> structures;
  std::uint64_t work = 0;
  if (monroe) {
    const int big = n % k;
    work = mul_saturating(binomial_saturating(k, big), falling_factorial(m, k));
    check_budget(work, config, "contiguous Monroe enumeration");
    std::vector<int> which = first_combination(big);
    do {
      std::vector<int> lengths(k, n / k);
      for (int i : which) ++lengths[i];
      structures.push_back(std::move(lengths));
    } while (next_combination(which, k));
  } else {
    for (int q = 1; q <= std::min(k, n); ++q) {
      work = add_saturating(work, mul_saturating(binomial_saturating(n - 1, q - 1),
                                                 falling_factorial(m, q)));
    }
    check_budget(work, config, "contiguous CC enumeration");
    for (int q = 1; q <= std::min(k, n); ++q) {
      std::vector<int> cuts = first_combination(q - 1);  // cut after voter cuts[i]
      do {
        std::vector<int> lengths;
        int prev = 0;
        for (int c : cuts) {
          lengths.push_back(c + 1 - prev);
          prev = c + 1;
        }
        lengths.push_back(n - prev);
        structures.push_back(std::move(lengths));
      } while (next_combination(cuts, n - 1));
    }
  }

  // cost[c][b] for the current structure's block b.
  Objective best = std::numeric_limits<Objective>::max();
  std::vector<CandidateId> best_reps;
  std::vector<int> pick;
  std::vector<bool> used(m, false);
  std::vector<std::vector<Objective>> cost;
  for (const std::vector<int>& lengths : structures) {
    const int blocks = static_cast<int>(lengths.size());
    cost.assign(m, std::vector<Objective>(blocks, 0));
    for (int c = 0; c < m; ++c) {
      int v = 0;
      for (int b = 0; b < blocks; ++b) {
        Objective acc = 0;
        for (int e = v + lengths[b]; v < e; ++v) {
          acc = aggregate(agg, acc, table[election.position(v, CandidateId(c))]);
        }
        cost[c][b] = acc;
      }
    }
    pick.assign(blocks, -1);
    // Depth-first over injections; only strict improvements are kept, so the
    // first optimum in enumeration order wins.
    auto dfs = [&](auto&& self, int b, Objective acc) -> void {
      if (acc >= best) return;
      if (b == blocks) {
        best = acc;
        best_reps.clear();
        for (int i = 0; i < blocks; ++i) {
          best_reps.insert(best_reps.end(), lengths[i], CandidateId(pick[i]));
        }
        return;
      }
      for (int c = 0; c < m; ++c) {
        if (used[c]) continue;
        used[c] = true;
        pick[b] = c;
        self(self, b + 1, aggregate(agg, acc, cost[c][b]));
        used[c] = false;
      }
    };
    dfs(dfs, 0, 0);
  }
  Assignment assignment(std::move(best_reps), k);
  const Objective objective = score(election, assignment, alpha, agg);
  return make_result(std::move(assignment), objective, rule, agg,
                     monroe ? "monroe-contiguous-bruteforce"
                            : "cc-contiguous-bruteforce",
                     start);
}

}  // namespace fpr
