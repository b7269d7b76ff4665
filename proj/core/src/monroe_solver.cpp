#include "fpr/monroe_solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>
#include <string>

#include "fpr/domains.hpp"
#include "fpr/error.hpp"

namespace fpr {

WorstPosWindow::WorstPosWindow(const Election& election, int length)
    : length_(length),
      stride_(static_cast<std::size_t>(election.n()) + 1),
      worst_(static_cast<std::size_t>(election.m()) * stride_, 0) {
  const int n = election.n();
  if (length < 1 || length > n) {
    throw InvalidInput("window length must lie in [1, n]");
  }
  std::deque<int> queue;  // voter indices with decreasing positions
  for (int c = 0; c < election.m(); ++c) {
    const CandidateId cand(c);
    queue.clear();
    for (int v = 0; v < n; ++v) {
      const int pos = election.position(v, cand);
      while (!queue.empty() && election.position(queue.back(), cand) <= pos) {
        queue.pop_back();
      }
      queue.push_back(v);
      if (queue.front() <= v - length) queue.pop_front();
      if (v + 1 >= length) {
        worst_[static_cast<std::size_t>(c) * stride_ + v + 1] =
            election.position(queue.front(), cand);
      }
    }
  }
}

namespace {

constexpr Objective kInf = Objective{1} << 60;

void check_monroe_k(const Election& election, int k) {
  if (k < 1 || k > std::min(election.m(), election.n())) {
    throw InvalidInput("Monroe needs 1 <= k <= min(m, n); got k = " +
                       std::to_string(k) + " with m = " +
                       std::to_string(election.m()) + ", n = " +
                       std::to_string(election.n()));
  }
}

// DP over (voters served, candidates considered, seats used) where each seat
// takes the next floor(n/k) or ceil(n/k) voters.
SolveResult solve_contiguous_dp(const Election& election, int k,
                                const DissatisfactionFunction& alpha,
                                Aggregator agg, std::string solver) {
  const auto start = std::chrono::steady_clock::now();
  const int n = election.n();
  const int m = election.m();
  const std::vector<Objective> alpha_table = alpha.table(m);
  const std::vector<CandidateId> order = first_voter_order(election);

  std::vector<int> lengths = {n / k};
  if (n % k != 0) lengths.push_back(n / k + 1);

  // Block cost of candidate c_j (1-based, voter 1's order) for the window of
  // length lengths[l] ending at voter i.
  std::vector<WorstPosWindow> windows;
  std::vector<std::vector<Objective>> prefix;
  if (agg == Aggregator::kMax) {
    for (int len : lengths) windows.emplace_back(election, len);
  } else {
    prefix.assign(m + 1, std::vector<Objective>(n + 1, 0));
    for (int j = 1; j <= m; ++j) {
      for (int v = 0; v < n; ++v) {
        prefix[j][v + 1] =
            prefix[j][v] + alpha_table[election.position(v, order[j - 1])];
      }
    }
  }
  auto block = [&](int j, std::size_t l, int i) -> Objective {
    if (agg == Aggregator::kMax) {
      return alpha_table[windows[l].worst(order[j - 1], i)];
    }
    return prefix[j][i] - prefix[j][i - lengths[l]];
  };

  const std::size_t plane = static_cast<std::size_t>(m + 1) * (n + 1);
  auto idx = [&](int i, int j, int t) {
    return static_cast<std::size_t>(t) * plane +
           static_cast<std::size_t>(j) * (n + 1) + i;
  };
  std::vector<Objective> table(plane * (k + 1), kInf);
  // Packed back-pointer: chosen j' times the number of window lengths plus
  // the window index.
  std::vector<int> choice(table.size(), -1);
  const int num_lengths = static_cast<int>(lengths.size());
  for (int j = 0; j <= m; ++j) table[idx(0, j, 0)] = 0;

  for (int t = 1; t <= k; ++t) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= m; ++j) {
        Objective best = kInf;
        int best_choice = -1;
        for (int l = 0; l < num_lengths; ++l) {
          const int start_voter = i - lengths[l];
          if (start_voter < 0) continue;
          for (int jp = 1; jp <= j; ++jp) {
            const Objective before = table[idx(start_voter, jp - 1, t - 1)];
            if (before >= kInf) continue;
            const Objective value = aggregate(agg, before, block(jp, l, i));
            if (value < best) {
              best = value;
              best_choice = jp * num_lengths + l;
            }
          }
        }
        table[idx(i, j, t)] = best;
        choice[idx(i, j, t)] = best_choice;
      }
    }
  }

  const Objective optimum = table[idx(n, m, k)];
  if (optimum >= kInf) {
    throw std::logic_error("Monroe DP found no feasible assignment");
  }
  std::vector<CandidateId> reps(n);
  for (int i = n, j = m, t = k; t > 0;) {
    const int packed = choice[idx(i, j, t)];
    const int jp = packed / num_lengths;
    const int len = lengths[packed % num_lengths];
    for (int v = i - len; v < i; ++v) reps[v] = order[jp - 1];
    i -= len;
    j = jp - 1;
    --t;
  }

  SolveResult result;
  result.assignment = Assignment(std::move(reps), k);
  result.objective = score(election, result.assignment, alpha, agg);
  if (result.objective != optimum) {
    throw std::logic_error("Monroe DP: recomputed objective differs");
  }
  result.rule = Rule::kMonroe;
  result.aggregator = agg;
  result.diagnostics.solver = std::move(solver);
  result.diagnostics.elapsed = std::chrono::steady_clock::now() - start;
  result.diagnostics.table_dims = {static_cast<std::size_t>(n + 1),
                                   static_cast<std::size_t>(m + 1),
                                   static_cast<std::size_t>(k + 1)};
  return result;
}

}  // namespace

SolveResult solve_monroe_egalitarian_sc_narcissistic(
    const Election& election, int k, const DissatisfactionFunction& alpha) {
  check_monroe_k(election, k);
  if (!check_single_crossing(election)) {
    throw DomainViolation("egalitarian Monroe DP needs a single-crossing profile");
  }
  if (!check_narcissistic(election)) {
    throw DomainViolation("egalitarian Monroe DP needs a narcissistic profile");
  }
  return solve_contiguous_dp(election, k, alpha, Aggregator::kMax,
                             "monroe-egalitarian-sc-narcissistic-dp");
}

SolveResult solve_monroe_contiguous(const Election& election, int k,
                                    const DissatisfactionFunction& alpha,
                                    Aggregator agg) {
  check_monroe_k(election, k);
  return solve_contiguous_dp(election, k, alpha, agg, "monroe-contiguous-dp");
}

}  // namespace fpr
