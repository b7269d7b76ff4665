#include "fpr/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "fpr/cc_solver.hpp"
#include "fpr/domains.hpp"
#include "fpr/instances.hpp"
#include "fpr/monroe_solver.hpp"
#include "fpr/reduction.hpp"
#include "fpr/rng.hpp"
#include "fpr/verify/oracles.hpp"

namespace fpr::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Counts checks and remembers the first few failures.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  int checks() const { return checks_; }
  std::string summary(const std::string& unit) const {
    std::ostringstream s;
    s << (checks_ - failures_) << "/" << checks_ << " " << unit;
    for (const std::string& n : notes_) s << "; " << n;
    if (failures_ > static_cast<int>(notes_.size())) {
      s << "; +" << failures_ - static_cast<int>(notes_.size()) << " more";
    }
    return s.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> notes_;
};

std::string str(std::int64_t v) { return std::to_string(v); }

std::string describe(int m, int n, int k, Aggregator agg) {
  return "m=" + str(m) + " n=" + str(n) + " k=" + str(k) + " " +
         std::string(to_string(agg));
}

std::vector<std::string> committee_names(const Election& e, const Assignment& a) {
  std::vector<std::string> out;
  for (CandidateId c : a.committee()) out.push_back(e.name(c));
  std::sort(out.begin(), out.end());
  return out;
}

const Aggregator kAggs[] = {Aggregator::kSum, Aggregator::kMax};

// Seeds for the single-crossing CC sweep shared by criteria 1 and 2.
constexpr int kCcSweep = 600;

template <typename Visit>
void cc_sweep(Visit visit) {
  const DissatisfactionFunction alphas[] = {DissatisfactionFunction::borda(),
                                            DissatisfactionFunction::t_approval(2)};
  for (int s = 0; s < kCcSweep; ++s) {
    const int m = 1 + s % 6;
    const int n = 1 + (s / 6) % 8;
    const Election e = gen_random_single_crossing(m, n, 1000 + s);
    for (int k = 1; k <= std::min(3, m); ++k) {
      for (Aggregator agg : kAggs) {
        for (const DissatisfactionFunction& alpha : alphas) {
          visit(e, k, alpha, agg);
        }
      }
    }
  }
}

CriterionResult criterion1(const OracleConfig& config) {
  const auto start = Clock::now();
  Tally tally;
  cc_sweep([&](const Election& e, int k, const DissatisfactionFunction& alpha,
               Aggregator agg) {
    const Objective dp = solve_cc(e, k, alpha, agg).objective;
    const Objective bf = solve_cc_bruteforce(e, k, alpha, agg, config).objective;
    tally.check(dp == bf, describe(e.m(), e.n(), k, agg) + " " + alpha.descriptor() +
                              ": dp " + str(dp) + " vs oracle " + str(bf));
  });
  const double secs = seconds_since(start);
  tally.check(secs < 60, "took " + std::to_string(secs) + " s");
  return {1, "CC oracle equivalence", tally.ok(),
          str(kCcSweep) + " elections, " + tally.summary("checks match"), secs};
}

CriterionResult criterion2(const OracleConfig&) {
  const auto start = Clock::now();
  Tally tally;
  cc_sweep([&](const Election& e, int k, const DissatisfactionFunction& alpha,
               Aggregator agg) {
    const SolveResult r = solve_cc(e, k, alpha, agg);
    tally.check(contiguity_report(e, r.assignment).contiguous,
                describe(e.m(), e.n(), k, agg) + " " + alpha.descriptor() +
                    ": non-contiguous output");
  });
  return {2, "CC contiguity", tally.ok(), tally.summary("outputs contiguous"),
          seconds_since(start)};
}

CriterionResult criterion3(const OracleConfig& config) {
  const auto start = Clock::now();
  const auto borda = DissatisfactionFunction::borda();
  Tally width, singleton;
  for (int s = 0; s < 200; ++s) {
    const int mb = 2 + s % 3;
    const int n = 1 + (s / 3) % 8;
    const Election base = gen_random_single_crossing(mb, n, 5000 + s);
    const ClonedInstance ci = gen_cloned_pairs(base, 9000 + s);
    const Election& e = ci.election;
    width.check(ci.partition.width() == 2 && e.m() <= 8 &&
                    verify_clone_partition(e, ci.partition),
                "seed " + str(s) + ": bad cloned instance");
    for (int k = 1; k <= std::min(3, e.m()); ++k) {
      for (Aggregator agg : kAggs) {
        const Objective w = solve_cc_width(e, ci.partition, k, borda, agg).objective;
        const Objective bf = solve_cc_bruteforce(e, k, borda, agg, config).objective;
        width.check(w == bf, describe(e.m(), n, k, agg) + ": width dp " + str(w) +
                                 " vs oracle " + str(bf));
      }
    }
    for (int k = 1; k <= std::min(3, mb); ++k) {
      for (Aggregator agg : kAggs) {
        const Objective w =
            solve_cc_width(base, ClonePartition::singletons(mb), k, borda, agg).objective;
        const Objective plain = solve_cc(base, k, borda, agg).objective;
        singleton.check(w == plain, describe(mb, n, k, agg) + ": singleton width " +
                                        str(w) + " vs solve_cc " + str(plain));
      }
    }
  }
  return {3, "Width solver", width.ok() && singleton.ok(),
          "200 cloned instances, " + width.summary("width runs match oracle") + ", " +
              singleton.summary("singleton runs match solve_cc"),
          seconds_since(start)};
}

CriterionResult criterion4(const OracleConfig& config) {
  const auto start = Clock::now();
  const auto borda = DissatisfactionFunction::borda();
  Tally tally;
  constexpr int kSeeds = 600;
  for (int s = 0; s < kSeeds; ++s) {
    const int m = 1 + s % 6;
    const int n = m + (s / 6) % (9 - m);
    const Election e = gen_random_sc_narcissistic(m, n, 7000 + s);
    for (int k = 1; k <= std::min({3, m, n}); ++k) {
      const Objective dp = solve_monroe_egalitarian_sc_narcissistic(e, k, borda).objective;
      const Objective bf =
          solve_monroe_bruteforce(e, k, borda, Aggregator::kMax, config).objective;
      tally.check(dp == bf, describe(m, n, k, Aggregator::kMax) + ": dp " + str(dp) +
                                " vs oracle " + str(bf));
    }
  }
  const double secs = seconds_since(start);
  tally.check(secs < 120, "took " + std::to_string(secs) + " s");
  return {4, "Egalitarian Monroe oracle equivalence", tally.ok(),
          str(kSeeds) + " elections, " + tally.summary("checks match"), secs};
}

CriterionResult criterion5(const OracleConfig& config) {
  const auto start = Clock::now();
  const auto borda = DissatisfactionFunction::borda();
  const Election e = gen_example_narcissistic_util();
  Tally tally;

  const SolveResult opt = solve_monroe_bruteforce(e, 2, borda, Aggregator::kSum, config);
  const auto opt_names = committee_names(e, opt.assignment);
  tally.check(opt.objective == 11 && opt_names == std::vector<std::string>{"c", "e"},
              "utilitarian optimum " + str(opt.objective));

  const SolveResult contig = solve_monroe_contiguous(e, 2, borda, Aggregator::kSum);
  const auto contig_names = committee_names(e, contig.assignment);
  tally.check(contig.objective == 13 &&
                  contig_names == std::vector<std::string>{"b", "d"},
              "contiguous optimum " + str(contig.objective));

  const std::vector<CandidateId> cd = {*e.find("c"), *e.find("d")};
  const auto balanced = optimal_balanced_assignment(e, cd, 2, borda, Aggregator::kSum);
  const Objective cd_score =
      balanced ? score(e, *balanced, borda, Aggregator::kSum) : -1;
  tally.check(cd_score >= 12, "{c,d} balanced score " + str(cd_score));

  const std::map<std::string, Objective> expected = {
      {"a", 9}, {"b", 4}, {"c", 1}, {"d", 9}, {"e", 10}, {"f", 14}};
  for (const auto& [name, value] : expected) {
    const Objective got = lowest(e, *e.find(name), 6, borda);
    tally.check(got == value, "lowest(" + name + ") = " + str(got));
  }
  return {5, "Twelve-voter golden numbers", tally.ok(), tally.summary("values match"),
          seconds_since(start)};
}

CriterionResult criterion6(const OracleConfig& config) {
  const auto start = Clock::now();
  const auto borda = DissatisfactionFunction::borda();
  Tally tally;
  for (int n = 1; n <= 3; ++n) {
    Objective previous_ratio = -1;
    for (int m = 1; m <= 4; ++m) {
      const Election e = gen_example_sc_gap(m, n);
      const std::string at = " at m=" + str(m) + " n=" + str(n);
      const Objective cs = best_contiguous_bruteforce(e, 2, borda, Aggregator::kSum,
                                                      Rule::kMonroe, config)
                               .objective;
      const Objective cm = best_contiguous_bruteforce(e, 2, borda, Aggregator::kMax,
                                                      Rule::kMonroe, config)
                               .objective;
      const Objective us =
          solve_monroe_bruteforce(e, 2, borda, Aggregator::kSum, config).objective;
      const Objective um =
          solve_monroe_bruteforce(e, 2, borda, Aggregator::kMax, config).objective;
      tally.check(cs == n * (m + 2), "contiguous sum " + str(cs) + " != " +
                                         str(n * (m + 2)) + at);
      tally.check(cm == m + 1, "contiguous max " + str(cm) + " != " + str(m + 1) + at);
      tally.check(us == 2 * n, "unrestricted sum " + str(us) + " != " + str(2 * n) + at);
      tally.check(um == 1, "unrestricted max " + str(um) + " != 1" + at);
      // Ratio (contiguous max) / (unrestricted max) must grow with m.
      const Objective ratio = um > 0 ? cm / um : -1;
      if (m > 1) {
        tally.check(ratio > previous_ratio, "ratio " + str(ratio) +
                                                " does not exceed " +
                                                str(previous_ratio) + at);
      }
      previous_ratio = ratio;
    }
  }
  return {6, "Four-group golden formulas", tally.ok(), tally.summary("values match"),
          seconds_since(start)};
}

CriterionResult criterion7(const OracleConfig& config) {
  const auto start = Clock::now();
  const auto borda = DissatisfactionFunction::borda();
  Tally tally;
  for (int m = 1; m <= 3; ++m) {
    const Election e = gen_example_sp(m);
    const std::string at = " at m=" + str(m);
    auto monroe = [&](Aggregator agg) {
      return solve_monroe_bruteforce(e, 2, borda, agg, config).objective;
    };
    auto contiguous = [&](Aggregator agg, Rule rule) {
      return best_contiguous_bruteforce(e, 2, borda, agg, rule, config).objective;
    };
    tally.check(monroe(Aggregator::kSum) == 4, "unrestricted sum" + at);
    tally.check(monroe(Aggregator::kMax) == 2, "unrestricted max" + at);
    tally.check(contiguous(Aggregator::kSum, Rule::kMonroe) == 2 * (m + 1),
                "contiguous Monroe sum" + at);
    tally.check(contiguous(Aggregator::kMax, Rule::kMonroe) == m + 1,
                "contiguous Monroe max" + at);
    tally.check(contiguous(Aggregator::kSum, Rule::kCC) >= m + 1, "contiguous CC sum" + at);
    tally.check(contiguous(Aggregator::kMax, Rule::kCC) >= m + 1, "contiguous CC max" + at);
    const Axis axis = example_sp_axis(m);
    tally.check(check_single_peaked_axis(e, axis), "displayed axis rejected" + at);
    tally.check(order_voters_by_axis(e, axis) == std::vector<int>{0, 1, 2, 3},
                "axis-induced voter order" + at);
  }
  const Election e1 = gen_example_sp(1);
  const std::vector<Axis> axes = all_single_peaked_axes_bruteforce(e1);
  tally.check(!axes.empty(), "no single-peaked axis for m=1");
  const CandidateId a = *e1.find("a"), b = *e1.find("b"), c = *e1.find("c"),
                    d = *e1.find("d");
  for (const Axis& axis : axes) {
    const int la = axis.location(a);
    const bool forward = la == 1 && axis.location(b) == 2 && axis.location(c) == 3 &&
                         axis.location(d) == 4;
    const bool backward = axis.location(d) == 1 && axis.location(c) == 2 &&
                          axis.location(b) == 3 && la == 4;
    tally.check(forward || backward, "axis with a,b,c,d off-centre");
  }
  return {7, "Single-peaked golden numbers", tally.ok(),
          tally.summary("checks pass") + " (" + str(static_cast<std::int64_t>(axes.size())) +
              " axes for m=1)",
          seconds_since(start)};
}

// Set sizes recomputed directly from the construction's formulas.
struct Formula {
  std::int64_t h, f, e, g_i, g, c;
  std::vector<std::int64_t> e_i;
  std::int64_t v1, v2, v3, v4, v5;
};

Formula formulas(std::int64_t m, std::int64_t n, std::int64_t k) {
  Formula x{};
  x.h = m - k;
  x.f = m * n;
  for (std::int64_t i = 1; i <= m; ++i) {
    x.e_i.push_back(2 * m * m * n + m + (m - i) * (2 * m * n + 1) * (n / k));
  }
  x.e = m * m * n + m;
  x.g_i = x.f;
  x.g = m * x.f + x.e;
  x.c = m;
  std::int64_t sum_e = 0;
  for (std::int64_t v : x.e_i) sum_e += v;
  x.v1 = x.h * (n / k);
  x.v2 = (m * x.f + sum_e + x.e) * (n / k + 1);
  x.v3 = m;
  x.v4 = n;
  x.v5 = (sum_e + m * x.g_i + x.g) * (n / k + 1);
  return x;
}

void check_reduction_structure(const ReductionOutput& red, int m, int n, int k,
                               Tally& tally) {
  const Election& sc = red.sc_election;
  const std::string at = " at (" + str(m) + "," + str(n) + "," + str(k) + ")";
  tally.check(check_single_crossing(sc), "not single-crossing" + at);

  const Formula x = formulas(m, n, k);
  std::map<std::pair<ReductionGroup, int>, std::int64_t> count;
  for (const CandidateTag& t : red.candidate_groups) ++count[{t.group, t.set}];
  tally.check(count[{ReductionGroup::kH, 0}] == x.h, "|H|" + at);
  tally.check(count[{ReductionGroup::kE, 0}] == x.e, "|E|" + at);
  tally.check(count[{ReductionGroup::kG, 0}] == x.g, "|G|" + at);
  tally.check(count[{ReductionGroup::kCPrime, 0}] == x.c, "|C'|" + at);
  for (int i = 1; i <= m; ++i) {
    const std::string set = std::to_string(i) + "|" + at;
    tally.check(count[{ReductionGroup::kF, i}] == x.f, "|F_" + set);
    tally.check(count[{ReductionGroup::kEi, i}] == x.e_i[i - 1], "|E_" + set);
    tally.check(count[{ReductionGroup::kD, i}] == x.e_i[i - 1], "|D_" + set);
    tally.check(count[{ReductionGroup::kGi, i}] == x.g_i, "|G_" + set);
  }
  std::map<int, std::int64_t> lists;
  for (int l : red.voter_lists) ++lists[l];
  const std::int64_t expected_lists[] = {x.v1, x.v2, x.v3, x.v4, x.v5};
  for (int l = 1; l <= 5; ++l) {
    tally.check(lists[l] == expected_lists[l - 1], "|V_" + str(l) + "|" + at);
  }
  tally.check(red.k_sc == sc.m() - x.h, "k_sc" + at);
  tally.check(static_cast<std::int64_t>(red.k_sc) * (n / k + 1) == sc.n(),
              "k_sc (n/k + 1) != voters" + at);

  std::int64_t sum_e = 0;
  for (std::int64_t v : x.e_i) sum_e += v;
  const std::int64_t sum_f = m * x.f;
  const std::int64_t p1 = x.h + sum_e + sum_f + x.e;
  const std::int64_t p2 = x.h + sum_e + sum_f + m * x.g_i + m;  // sum |D_i| = sum |E_i|
  const std::int64_t p3 = x.h + sum_e;
  const std::int64_t p4 = x.h + sum_f + (sum_e - x.e_i[m - 1]) + x.e + 1;
  const std::int64_t p5 = p1;
  // By the set sizes p1 and p2 are the same number, so (f) can only hold
  // with equality; what the argument needs is that every V1/V2/V5 position
  // of a C' candidate is worse than every V4 position, checked below.
  tally.check(p1 >= p2, "p1 < p2" + at);

  bool h_ok = true, d_ok = true, e_ok = true, adj_ok = true;
  std::vector<int> v3_close(m, 0);
  bool g_far = true;
  int v4_index = 0;
  int best_far = sc.m() + 1, worst_v4 = 0;
  for (int v = 0; v < sc.n(); ++v) {
    for (int h = 0; h < x.h; ++h) h_ok &= sc.position(v, CandidateId(h)) == h + 1;
    const int list = red.voter_lists[v];
    for (int c = 0; c < m; ++c) {
      const int pos = sc.position(v, red.c_prime[c]);
      if (list == 1 || list == 2 || list == 5) {
        d_ok &= pos > p1;
        best_far = std::min(best_far, pos);
      }
      if (list == 4) {
        worst_v4 = std::max(worst_v4, pos);
        e_ok &= pos < p2 && pos > p3;
        // c'_{c+1} sits in segment i = m - c of the adjustment block.
        const std::int64_t segment = m - c;
        const std::int64_t expected = x.h + sum_e + (segment - 1) * (2 * x.f + 1) +
                                      x.f + red.original.position(v4_index, CandidateId(c));
        adj_ok &= pos == expected;
      }
      if (list == 3) {
        if (pos <= p4) {
          ++v3_close[c];
        } else {
          g_far &= pos > p5;
        }
      }
    }
    if (list == 4) ++v4_index;
  }
  tally.check(h_ok, "H not ranked h_1..h_{m-k} on top" + at);
  tally.check(d_ok, "property (d)" + at);
  tally.check(e_ok, "property (e)" + at);
  tally.check(adj_ok, "adjustment position shift" + at);
  tally.check(best_far > worst_v4, "V1/V2/V5 position " + str(best_far) +
                                       " not worse than V4 position " + str(worst_v4) + at);
  tally.check(std::all_of(v3_close.begin(), v3_close.end(), [](int c) { return c == 1; }) &&
                  g_far,
              "property (g)" + at);
}

CriterionResult criterion8(const OracleConfig&) {
  const auto start = Clock::now();
  Tally tally;
  const int params[][3] = {{2, 2, 1}, {2, 4, 2}, {3, 3, 1}};
  for (const auto& p : params) {
    const Election source = random_election(p[0], p[1], 40 + p[0] * 10 + p[1]);
    const ReductionOutput red = build_monroe_reduction(source, p[2]);
    check_reduction_structure(red, p[0], p[1], p[2], tally);
    if (p[0] == 2 && p[1] == 2 && p[2] == 1) {
      tally.check(red.sc_election.m() == 155 && red.sc_election.n() == 462 &&
                      red.k_sc == 154,
                  "(2,2,1) gives " + str(red.sc_election.m()) + " candidates, " +
                      str(red.sc_election.n()) + " voters, k_sc " + str(red.k_sc));
    }
  }
  return {8, "Reduction structure", tally.ok(), tally.summary("checks pass"),
          seconds_since(start)};
}

CriterionResult criterion9(const OracleConfig& config) {
  const auto start = Clock::now();
  const auto borda = DissatisfactionFunction::borda();
  Tally tally;
  const Objective delta = calibrate_offset(2, 2, 1, config);
  // Every 2-voter profile over 2 candidates except the calibration one.
  const std::vector<std::vector<int>> sources = {{1, 0, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}};
  std::string deltas = str(delta);
  for (const auto& s : sources) {
    const Election source({PreferenceOrder::from_indices(std::vector<int>{s[0], s[1]}),
                           PreferenceOrder::from_indices(std::vector<int>{s[2], s[3]})});
    const Objective opt =
        solve_monroe_bruteforce(source, 1, borda, Aggregator::kSum, config).objective;
    const ReductionOutput red = build_monroe_reduction(source, 1);
    const SolveResult sc = solve_monroe_bruteforce(red.sc_election, red.k_sc, borda,
                                                   Aggregator::kSum, config);
    deltas += "," + str(sc.objective - opt);
    tally.check(sc.objective - opt == delta,
                "offset " + str(sc.objective - opt) + " != " + str(delta));
    const ExtractionReport report = extract_original_committee(red, sc.assignment);
    tally.check(report.ok, "extraction failed: " + report.message);
    if (report.ok) {
      const auto a = optimal_balanced_assignment(source, report.committee, 1, borda,
                                                 Aggregator::kSum);
      tally.check(a && score(source, *a, borda, Aggregator::kSum) == opt,
                  "extracted committee is not optimal");
    }
  }
  const double secs = seconds_since(start);
  tally.check(secs < 600, "took " + std::to_string(secs) + " s");
  return {9, "Reduction end to end", tally.ok(),
          "offsets " + deltas + "; " + tally.summary("checks pass"), secs};
}

CriterionResult criterion10(const OracleConfig&) {
  const auto start = Clock::now();
  Tally tally;
  for (int s = 0; s < 200; ++s) {
    const int m = 2 + s % 5;
    const int n = 1 + (s / 5) % 8;
    const int k = 1 + (s / 40) % std::min({3, m, n});
    const Election e = random_election(m, n, 20000 + s);
    const DissatisfactionFunction alpha = s % 2 == 0
                                              ? DissatisfactionFunction::borda()
                                              : DissatisfactionFunction::t_approval(2);
    std::vector<int> ids(m);
    for (int c = 0; c < m; ++c) ids[c] = c;
    SplitMix64 rng(30000 + s);
    rng.shuffle(ids);
    std::vector<CandidateId> committee;
    for (int i = 0; i < k; ++i) committee.emplace_back(ids[i]);
    std::sort(committee.begin(), committee.end());
    for (Aggregator agg : kAggs) {
      const auto flow = optimal_balanced_assignment(e, committee, k, alpha, agg);
      const auto brute = exhaustive_balanced(e, committee, alpha, agg);
      const std::string at = describe(m, n, k, agg) + " seed " + str(s);
      if (!flow || !brute) {
        tally.check(false, "no balanced assignment " + at);
        continue;
      }
      const Objective got = score(e, *flow, alpha, agg);
      tally.check(got == *brute && validate_assignment(e, *flow, Rule::kMonroe).valid &&
                      flow->committee() == committee,
                  at + ": flow " + str(got) + " vs enumeration " + str(*brute));
    }
  }
  return {10, "Flow oracle", tally.ok(), "200 instances, " + tally.summary("checks match"),
          seconds_since(start)};
}

// Best of `reps` timings, in seconds.
double time_best(int reps, const std::function<void()>& run) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    run();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

CriterionResult criterion11(const OracleConfig&) {
  const auto start = Clock::now();
  const auto borda = DissatisfactionFunction::borda();
  Tally tally;
  std::ostringstream detail;
  detail.precision(3);

  const int cc_sizes[] = {500, 1000, 2000, 4000};
  std::vector<double> cc_times;
  for (int n : cc_sizes) {
    const Election e = gen_random_single_crossing(50, n, 11000 + n);
    cc_times.push_back(time_best(n >= 4000 ? 1 : 3, [&] {
      solve_cc(e, 10, borda, Aggregator::kSum);
    }));
  }
  detail << "CC ratios";
  for (std::size_t i = 1; i < cc_times.size(); ++i) {
    const double r = cc_times[i] / cc_times[i - 1];
    detail << " " << r;
    tally.check(r >= 2 && r <= 8, "CC ratio at n=" + str(cc_sizes[i]) + " outside [2,8]");
  }

  const int monroe_sizes[] = {250, 500, 1000, 2000};
  std::vector<double> monroe_times;
  for (int n : monroe_sizes) {
    const Election e = gen_random_sc_narcissistic(60, n, 12000 + n);
    monroe_times.push_back(time_best(5, [&] {
      solve_monroe_egalitarian_sc_narcissistic(e, 10, borda);
    }));
  }
  detail << "; Monroe ratios";
  for (std::size_t i = 1; i < monroe_times.size(); ++i) {
    const double r = monroe_times[i] / monroe_times[i - 1];
    detail << " " << r;
    tally.check(r >= 1 && r <= 4,
                "Monroe ratio at n=" + str(monroe_sizes[i]) + " outside [1,4]");
  }
  const double secs = seconds_since(start);
  detail << "; largest runs " << cc_times.back() << " s and " << monroe_times.back()
         << " s";
  tally.check(secs < 60, "took " + std::to_string(secs) + " s");
  return {11, "Complexity smoke test", tally.ok(),
          detail.str() + "; " + tally.summary("checks pass"), secs};
}

using Runner = CriterionResult (*)(const OracleConfig&);
const Runner kRunners[] = {criterion1, criterion2, criterion3,  criterion4,
                           criterion5, criterion6, criterion7,  criterion8,
                           criterion9, criterion10, criterion11};

}  // namespace

std::vector<int> acceptance_ids() {
  std::vector<int> ids;
  for (int i = 1; i <= static_cast<int>(std::size(kRunners)); ++i) ids.push_back(i);
  return ids;
}

CriterionResult run_criterion(int id, const OracleConfig& config) {
  if (id < 1 || id > static_cast<int>(std::size(kRunners))) {
    return {id, "unknown criterion", false, "no such criterion", 0};
  }
  const auto start = Clock::now();
  try {
    return kRunners[id - 1](config);
  } catch (const std::exception& e) {
    return {id, "criterion " + std::to_string(id), false,
            std::string("exception: ") + e.what(), seconds_since(start)};
  }
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only,
                                            const OracleConfig& config,
                                            std::ostream& out) {
  std::vector<CriterionResult> results;
  for (int id : only.empty() ? acceptance_ids() : only) {
    results.push_back(run_criterion(id, config));
    out << format_result(results.back()) << '\n' << std::flush;
  }
  return results;
}

std::string format_result(const CriterionResult& result) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", result.seconds);
  return std::string(result.passed ? "[PASS] " : "[FAIL] ") +
         (result.id < 10 ? " " : "") + std::to_string(result.id) + " " + result.title +
         ": " + result.detail + " (" + secs + " s)";
}

}  // namespace fpr::verify
