#pragma once

// Elections, dissatisfaction functions, assignments and their scoring.
//
// Conventions used throughout the library:
//   * candidates are dense indices in [0, m) wrapped in CandidateId;
//   * voters are indexed 0..n-1 in profile order;
//   * ranks/positions are 1-based (the top candidate has position 1), so a
//     dissatisfaction function always satisfies alpha(1) == 0.

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fpr {

using Objective = std::int64_t;

class CandidateId {
 public:
  constexpr CandidateId() = default;
  constexpr explicit CandidateId(int index) : index_(index) {}

  constexpr int index() const { return index_; }

  friend constexpr auto operator<=>(CandidateId, CandidateId) = default;

 private:
  int index_ = 0;
};

/// A strict, complete ranking of the m candidates, best first.
class PreferenceOrder {
 public:
  PreferenceOrder() = default;
  /// Throws InvalidInput unless `ranking` is a permutation of 0..m-1.
  explicit PreferenceOrder(std::vector<CandidateId> ranking);
  static PreferenceOrder from_indices(std::span<const int> ranking);

  int size() const { return static_cast<int>(ranking_.size()); }
  std::span<const CandidateId> ranking() const { return ranking_; }
  /// Candidate at 1-based `position`.
  CandidateId at(int position) const { return ranking_[position - 1]; }
  /// 1-based position of `c`.
  int position(CandidateId c) const { return rank_of_[c.index()]; }
  bool prefers(CandidateId a, CandidateId b) const {
    return position(a) < position(b);
  }
  CandidateId top() const { return ranking_.front(); }

  friend bool operator==(const PreferenceOrder& a, const PreferenceOrder& b) {
    return a.ranking_ == b.ranking_;
  }

 private:
  std::vector<CandidateId> ranking_;
  std::vector<int> rank_of_;
};

/// An ordered list of voters over a common candidate set. Voter order is
/// meaningful: it is the witness order for single-crossingness.
class Election {
 public:
  /// Default names c1..cm.
  explicit Election(std::vector<PreferenceOrder> voters);
  Election(std::vector<std::string> names, std::vector<PreferenceOrder> voters);

  int m() const { return static_cast<int>(names_.size()); }
  int n() const { return static_cast<int>(voters_.size()); }

  const PreferenceOrder& voter(int i) const { return voters_[i]; }
  std::span<const PreferenceOrder> voters() const { return voters_; }
  int position(int voter, CandidateId c) const {
    return voters_[voter].position(c);
  }

  const std::string& name(CandidateId c) const { return names_[c.index()]; }
  std::span<const std::string> names() const { return names_; }
  std::optional<CandidateId> find(std::string_view name) const;

  /// Voter i of the result is voter perm[i] of this election.
  Election reordered(std::span<const int> perm) const;
  Election with_reversed_voters() const;

  friend bool operator==(const Election& a, const Election& b) {
    return a.names_ == b.names_ && a.voters_ == b.voters_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<PreferenceOrder> voters_;
};

/// Maps a 1-based rank position to a nonnegative penalty, with alpha(1) == 0
/// and alpha nondecreasing.
class DissatisfactionFunction {
 public:
  enum class Kind { kBorda, kTApproval, kCustom };

  static DissatisfactionFunction borda();
  /// alpha(i) = 0 for i <= t, 1 otherwise.
  static DissatisfactionFunction t_approval(int t);
  /// values[i-1] = alpha(i). Throws InvalidInput unless values[0] == 0 and
  /// the sequence is nondecreasing.
  static DissatisfactionFunction custom(std::vector<Objective> values);

  Kind kind() const { return kind_; }
  int t() const { return t_; }
  std::span<const Objective> custom_values() const { return values_; }

  Objective operator()(int position) const;
  /// Table indexed by position 0..m (entry 0 unused). Throws InvalidInput if
  /// a custom vector does not have exactly m entries.
  std::vector<Objective> table(int m) const;
  /// "borda", "tapproval:T" or "custom:v1,v2,...".
  std::string descriptor() const;

 private:
  DissatisfactionFunction(Kind kind, int t, std::vector<Objective> values)
      : kind_(kind), t_(t), values_(std::move(values)) {}

  Kind kind_;
  int t_;
  std::vector<Objective> values_;
};

enum class Aggregator { kSum, kMax };
enum class Rule { kCC, kMonroe };

constexpr Objective aggregate(Aggregator agg, Objective acc, Objective value) {
  return agg == Aggregator::kSum ? acc + value
                                 : (value > acc ? value : acc);
}
Objective aggregate(Aggregator agg, std::span<const Objective> values);

std::string_view to_string(Aggregator agg);
std::string_view to_string(Rule rule);

/// Voter -> representative map plus the target committee size.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::vector<CandidateId> rep_of, int k)
      : rep_of_(std::move(rep_of)), k_(k) {}

  int n() const { return static_cast<int>(rep_of_.size()); }
  int k() const { return k_; }
  CandidateId rep_of(int voter) const { return rep_of_[voter]; }
  std::span<const CandidateId> reps() const { return rep_of_; }
  /// Distinct representatives, ascending.
  std::vector<CandidateId> committee() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<CandidateId> rep_of_;
  int k_ = 0;
};

struct Diagnostics {
  std::string solver;
  std::chrono::nanoseconds elapsed{0};
  std::vector<std::size_t> table_dims;
};

struct SolveResult {
  Assignment assignment;
  Objective objective = 0;
  Rule rule = Rule::kCC;
  Aggregator aggregator = Aggregator::kSum;
  Diagnostics diagnostics;
};

/// Aggregated dissatisfaction of `assignment`. Throws InvalidInput when the
/// assignment does not cover exactly the election's voters with valid
/// candidates.
Objective score(const Election& election, const Assignment& assignment,
                const DissatisfactionFunction& alpha, Aggregator agg);

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
  explicit operator bool() const { return valid; }
};

ValidationReport validate_assignment(const Election& election,
                                     const Assignment& assignment, Rule rule);

struct VoterBlock {
  CandidateId candidate;
  int first = 0;  // 0-based voter index, inclusive
  int last = 0;   // inclusive
};

struct ContiguityReport {
  /// Every representative's voters form one interval, and the intervals
  /// follow the first voter's ranking of the representatives.
  bool contiguous = true;
  /// Maximal runs of equal representatives in voter order.
  std::vector<VoterBlock> blocks;
};

ContiguityReport contiguity_report(const Election& election,
                                   const Assignment& assignment);

/// Each voter's most preferred member of `committee` (non-empty).
std::vector<CandidateId> favorite_members(
    const Election& election, std::span<const CandidateId> committee);

/// Candidates listed in voter 0's order; the solvers work in this relabeling.
std::vector<CandidateId> first_voter_order(const Election& election);

}  // namespace fpr
