#include "fpr/core.hpp"

#include <algorithm>
#include <numeric>

#include "fpr/error.hpp"

namespace fpr {

PreferenceOrder::PreferenceOrder(std::vector<CandidateId> ranking)
    : ranking_(std::move(ranking)), rank_of_(ranking_.size(), 0) {
  const int m = size();
  for (int p = 0; p < m; ++p) {
    const int c = ranking_[p].index();
    if (c < 0 || c >= m) {
      throw InvalidInput("preference order: candidate index " +
                         std::to_string(c) + " out of range [0, " +
                         std::to_string(m) + ")");
    }
    if (rank_of_[c] != 0) {
      throw InvalidInput("preference order: candidate index " +
                         std::to_string(c) + " repeated");
    }
    rank_of_[c] = p + 1;
  }
}

PreferenceOrder PreferenceOrder::from_indices(std::span<const int> ranking) {
  std::vector<CandidateId> ids;
  ids.reserve(ranking.size());
  for (int c : ranking) ids.emplace_back(c);
  return PreferenceOrder(std::move(ids));
}

namespace {

std::vector<std::string> default_names(int m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (int i = 1; i <= m; ++i) names.push_back("c" + std::to_string(i));
  return names;
}

}  // namespace

Election::Election(std::vector<PreferenceOrder> voters)
    : Election(std::vector<std::string>{}, std::move(voters)) {}

Election::Election(std::vector<std::string> names,
                   std::vector<PreferenceOrder> voters)
    : names_(std::move(names)), voters_(std::move(voters)) {
  if (names_.empty() && !voters_.empty()) names_ = default_names(voters_.front().size());
  if (voters_.empty()) throw InvalidInput("election needs at least one voter");
  if (names_.empty()) throw InvalidInput("election needs at least one candidate");
  for (std::size_t i = 0; i < voters_.size(); ++i) {
    if (voters_[i].size() != m()) {
      throw InvalidInput("voter " + std::to_string(i + 1) + " ranks " +
                         std::to_string(voters_[i].size()) +
                         " candidates, expected " + std::to_string(m()));
    }
  }
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("candidate names must be unique");
  }
}

std::optional<CandidateId> Election::find(std::string_view name) const {
  for (int c = 0; c < m(); ++c) {
    if (names_[c] == name) return CandidateId(c);
  }
  return std::nullopt;
}

Election Election::reordered(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n()) {
    throw InvalidInput("voter permutation has wrong length");
  }
  std::vector<char> seen(n(), 0);
  std::vector<PreferenceOrder> voters;
  voters.reserve(n());
  for (int v : perm) {
    if (v < 0 || v >= n() || seen[v]) {
      throw InvalidInput("voter permutation is not a permutation");
    }
    seen[v] = 1;
    voters.push_back(voters_[v]);
  }
  return Election(names_, std::move(voters));
}

Election Election::with_reversed_voters() const {
  std::vector<PreferenceOrder> voters(voters_.rbegin(), voters_.rend());
  return Election(names_, std::move(voters));
}

DissatisfactionFunction DissatisfactionFunction::borda() {
  return DissatisfactionFunction(Kind::kBorda, 0, {});
}

DissatisfactionFunction DissatisfactionFunction::t_approval(int t) {
  if (t < 1) throw InvalidInput("t-approval needs t >= 1");
  return DissatisfactionFunction(Kind::kTApproval, t, {});
}

DissatisfactionFunction DissatisfactionFunction::custom(
    std::vector<Objective> values) {
  if (values.empty()) throw InvalidInput("custom dissatisfaction is empty");
  if (values.front() != 0) {
    throw InvalidInput("custom dissatisfaction must have alpha(1) = 0");
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) {
      throw InvalidInput("custom dissatisfaction must be nondecreasing (alpha(" +
                         std::to_string(i + 1) + ") < alpha(" +
                         std::to_string(i) + "))");
    }
  }
  return DissatisfactionFunction(Kind::kCustom, 0, std::move(values));
}

Objective DissatisfactionFunction::operator()(int position) const {
  switch (kind_) {
    case Kind::kBorda:
      return position - 1;
    case Kind::kTApproval:
      return position <= t_ ? 0 : 1;
    case Kind::kCustom:
      return values_.at(position - 1);
  }
  return 0;
}

std::vector<Objective> DissatisfactionFunction::table(int m) const {
  if (kind_ == Kind::kCustom && static_cast<int>(values_.size()) != m) {
    throw InvalidInput("custom dissatisfaction has " +
                       std::to_string(values_.size()) + " values but m = " +
                       std::to_string(m));
  }
  std::vector<Objective> t(m + 1, 0);
  for (int p = 1; p <= m; ++p) t[p] = (*this)(p);
  return t;
}

std::string DissatisfactionFunction::descriptor() const {
  switch (kind_) {
    case Kind::kBorda:
      return "borda";
    case Kind::kTApproval:
      return "tapproval:" + std::to_string(t_);
    case Kind::kCustom: {
      std::string s = "custom:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values_[i]);
      }
      return s;
    }
  }
  return {};
}

Objective aggregate(Aggregator agg, std::span<const Objective> values) {
  Objective acc = 0;
  for (Objective v : values) acc = aggregate(agg, acc, v);
  return acc;
}

std::string_view to_string(Aggregator agg) {
  return agg == Aggregator::kSum ? "sum" : "max";
}

std::string_view to_string(Rule rule) {
  return rule == Rule::kCC ? "cc" : "monroe";
}

std::vector<CandidateId> Assignment::committee() const {
  std::vector<CandidateId> c = rep_of_;
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

namespace {

void check_dimensions(const Election& election, const Assignment& assignment) {
  if (assignment.n() != election.n()) {
    throw InvalidInput("assignment covers " + std::to_string(assignment.n()) +
                       " voters, election has " + std::to_string(election.n()));
  }
  for (CandidateId c : assignment.reps()) {
    if (c.index() < 0 || c.index() >= election.m()) {
      throw InvalidInput("assignment uses unknown candidate index " +
                         std::to_string(c.index()));
    }
  }
}

}  // namespace

Objective score(const Election& election, const Assignment& assignment,
                const DissatisfactionFunction& alpha, Aggregator agg) {
  check_dimensions(election, assignment);
  const std::vector<Objective> table = alpha.table(election.m());
  Objective acc = 0;
  for (int i = 0; i < election.n(); ++i) {
    acc = aggregate(agg, acc, table[election.position(i, assignment.rep_of(i))]);
  }
  return acc;
}

ValidationReport validate_assignment(const Election& election,
                                     const Assignment& assignment, Rule rule) {
  ValidationReport report;
  auto fail = [&report](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };
  if (assignment.n() != election.n()) {
    fail("assignment covers " + std::to_string(assignment.n()) +
         " voters, election has " + std::to_string(election.n()));
    return report;
  }
  for (CandidateId c : assignment.reps()) {
    if (c.index() < 0 || c.index() >= election.m()) {
      fail("unknown candidate index " + std::to_string(c.index()));
      return report;
    }
  }
  const int k = assignment.k();
  if (k < 1) fail("committee size k must be positive");
  const std::vector<CandidateId> committee = assignment.committee();
  const int used = static_cast<int>(committee.size());
  if (used > k) {
    fail("committee has " + std::to_string(used) + " members, k = " +
         std::to_string(k));
  }
  if (rule == Rule::kMonroe && k >= 1) {
    if (used != k) {
      fail("Monroe committee must have exactly k = " + std::to_string(k) +
           " members, has " + std::to_string(used));
    }
    const int n = election.n();
    const int lo = n / k;
    const int hi = (n + k - 1) / k;
    std::vector<int> load(election.m(), 0);
    for (CandidateId c : assignment.reps()) ++load[c.index()];
    for (CandidateId c : committee) {
      const int l = load[c.index()];
      if (l < lo || l > hi) {
        fail("candidate " + election.name(c) + " represents " +
             std::to_string(l) + " voters, allowed [" + std::to_string(lo) +
             ", " + std::to_string(hi) + "]");
      }
    }
  }
  return report;
}

ContiguityReport contiguity_report(const Election& election,
                                   const Assignment& assignment) {
  check_dimensions(election, assignment);
  ContiguityReport report;
  for (int i = 0; i < assignment.n(); ++i) {
    const CandidateId c = assignment.rep_of(i);
    if (!report.blocks.empty() && report.blocks.back().candidate == c) {
      report.blocks.back().last = i;
    } else {
      report.blocks.push_back({c, i, i});
    }
  }
  const PreferenceOrder& first = election.voter(0);
  for (std::size_t b = 1; b < report.blocks.size(); ++b) {
    // A repeated candidate also fails this test, since its position would
    // have to be strictly below itself.
    if (!first.prefers(report.blocks[b - 1].candidate,
                       report.blocks[b].candidate)) {
      report.contiguous = false;
    }
  }
  return report;
}

std::vector<CandidateId> favorite_members(
    const Election& election, std::span<const CandidateId> committee) {
  if (committee.empty()) throw InvalidInput("committee is empty");
  std::vector<CandidateId> reps(election.n());
  for (int i = 0; i < election.n(); ++i) {
    CandidateId best = committee.front();
    for (CandidateId c : committee) {
      if (election.position(i, c) < election.position(i, best)) best = c;
    }
    reps[i] = best;
  }
  return reps;
}

std::vector<CandidateId> first_voter_order(const Election& election) {
  const auto r = election.voter(0).ranking();
  return {r.begin(), r.end()};
}

}  // namespace fpr
