#pragma once

// Text profile format, result documents and the reduction sidecar.
//
// Profile format (1-based candidate indices, best first):
//
//   3
//   1<TAB>a
//   2<TAB>b
//   3<TAB>c
//   5 2
//   3: 1,2,3
//   2: 3,2,1
//
// The header line after the names gives the number of voters and the number
// of vote lines that follow. Vote lines expand into voters in file order,
// which is significant (it is the single-crossing witness order), so the
// canonical serialisation only merges runs of identical consecutive votes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpr/core.hpp"
#include "fpr/domains.hpp"
#include "fpr/reduction.hpp"

namespace fpr {

/// Throws ParseError (with the 1-based line number) on malformed input.
Election parse_profile(std::istream& in, const std::string& source = "<input>");
Election parse_profile_string(std::string_view text,
                              const std::string& source = "<input>");
Election load_profile(const std::string& path);

void write_profile(std::ostream& out, const Election& election);
std::string serialize_profile(const Election& election);

/// "borda", "tapproval:T" (also "tapprox:T") or "custom:v1,v2,...".
/// Throws InvalidInput on anything else.
DissatisfactionFunction parse_alpha(std::string_view descriptor);
/// Reads whitespace- or comma-separated alpha values from a file.
DissatisfactionFunction load_custom_alpha(const std::string& path);

/// Clone partition file: one set per line, candidate names separated by
/// whitespace or commas. Blank lines and '#' comments are ignored.
ClonePartition parse_partition(std::istream& in, const Election& election,
                               const std::string& source = "<input>");

struct ResultBlock {
  std::string candidate;
  int first = 0;  // 0-based voter, inclusive
  int last = 0;
  friend bool operator==(const ResultBlock&, const ResultBlock&) = default;
};

struct ResultDocument {
  /// Set when the solver ran on reordered voters: the 1-based input index of
  /// each voter, in the order used by `representatives` and `blocks`.
  std::optional<std::vector<int>> voter_order;
  std::string rule;
  std::string aggregator;
  std::string alpha;
  int k = 0;
  Objective objective = 0;
  std::vector<std::string> committee;
  std::vector<std::string> representatives;  // per voter
  bool contiguous = false;
  std::vector<ResultBlock> blocks;
  std::string solver;
  std::vector<std::uint64_t> table_dims;
  /// Only present when timing was requested; without it the document is a
  /// pure function of the inputs.
  std::optional<std::int64_t> elapsed_ns;

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

ResultDocument make_result_document(const Election& election,
                                    const SolveResult& result,
                                    const DissatisfactionFunction& alpha, int k,
                                    bool with_timing = false);

/// JSON with a fixed key order, two-space indented, trailing newline.
std::string to_json(const ResultDocument& doc);
/// Throws ParseError on malformed JSON or missing fields.
ResultDocument result_from_json(std::string_view text);

/// Rebuilds the assignment from the representative names and rescores it
/// against `election` (given in input order; voter_order is applied here).
/// Throws InvalidInput if names are unknown or the objective disagrees.
Assignment revalidate(const ResultDocument& doc, const Election& election);

/// Group membership of every constructed candidate and the voter-list runs.
std::string reduction_sidecar_json(const ReductionOutput& output);

}  // namespace fpr
