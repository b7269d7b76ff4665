#include "fpr/profile_io.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fpr/error.hpp"
#include "json.hpp"

namespace fpr {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename Int>
std::optional<Int> to_int(std::string_view s) {
  s = trim(s);
  Int value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return value;
}

// Splits on commas and whitespace, dropping empty pieces.
std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i])))) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ',' && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

class LineReader {
 public:
  LineReader(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  // Next line that is neither blank nor a '#' comment.
  std::optional<std::string_view> next() {
    while (std::getline(in_, buffer_)) {
      ++line_;
      const std::string_view t = trim(buffer_);
      if (!t.empty() && t.front() != '#') return std::string_view(buffer_);
    }
    return std::nullopt;
  }

  std::string_view require(const std::string& what) {
    auto line = next();
    if (!line) fail("unexpected end of input, expected " + what);
    return *line;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(source_, line_, what);
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  std::string source_;
  std::string buffer_;
  int line_ = 0;
};

Aggregator aggregator_from(std::string_view s) {
  if (s == "sum") return Aggregator::kSum;
  if (s == "max") return Aggregator::kMax;
  throw InvalidInput("unknown aggregator '" + std::string(s) + "'");
}

Rule rule_from(std::string_view s) {
  if (s == "cc") return Rule::kCC;
  if (s == "monroe") return Rule::kMonroe;
  throw InvalidInput("unknown rule '" + std::string(s) + "'");
}

}  // namespace

Election parse_profile(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  const auto m = to_int<int>(reader.require("candidate count"));
  if (!m || *m < 1) reader.fail("candidate count must be a positive integer");

  std::vector<std::string> names(*m);
  std::vector<bool> named(*m, false);
  for (int i = 0; i < *m; ++i) {
    const std::string_view line = reader.require("candidate line");
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) reader.fail("expected 'index<TAB>name'");
    const auto index = to_int<int>(line.substr(0, tab));
    if (!index || *index < 1 || *index > *m) {
      reader.fail("candidate index must lie in 1.." + std::to_string(*m));
    }
    if (named[*index - 1]) {
      reader.fail("candidate index " + std::to_string(*index) + " listed twice");
    }
    const std::string_view name = trim(line.substr(tab + 1));
    if (name.empty()) reader.fail("empty candidate name");
    named[*index - 1] = true;
    names[*index - 1] = std::string(name);
  }

  const std::vector<std::string_view> header = tokens(reader.require("'n n_distinct' line"));
  std::optional<long long> n, lines;
  if (header.size() == 2) {
    n = to_int<long long>(header[0]);
    lines = to_int<long long>(header[1]);
  }
  if (!n || !lines || *n < 1 || *lines < 1 || *lines > *n) {
    reader.fail("expected 'n n_distinct' with 1 <= n_distinct <= n");
  }
  const int header_line = reader.line();

  std::vector<PreferenceOrder> voters;
  long long total = 0;
  std::vector<int> seen(*m);
  for (long long l = 0; l < *lines; ++l) {
    const std::string_view line = reader.require("vote line");
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) reader.fail("expected 'count: i1,...,im'");
    const auto count = to_int<long long>(line.substr(0, colon));
    if (!count || *count < 1) reader.fail("vote count must be a positive integer");
    const std::vector<std::string_view> items = tokens(line.substr(colon + 1));
    if (static_cast<int>(items.size()) != *m) {
      reader.fail("vote lists " + std::to_string(items.size()) +
                  " candidates, expected " + std::to_string(*m));
    }
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> ranking;
    for (std::string_view item : items) {
      const auto c = to_int<int>(item);
      if (!c || *c < 1 || *c > *m) {
        reader.fail("bad candidate index '" + std::string(item) + "'");
      }
      if (seen[*c - 1]++) {
        reader.fail("candidate index " + std::to_string(*c) + " repeated in vote");
      }
      ranking.push_back(*c - 1);
    }
    total += *count;
    if (total > *n) reader.fail("vote counts exceed n = " + std::to_string(*n));
    voters.insert(voters.end(), static_cast<std::size_t>(*count),
                  PreferenceOrder::from_indices(ranking));
  }
  if (total != *n) {
    throw ParseError(source, header_line,
                     "vote counts sum to " + std::to_string(total) +
                         " but the header says n = " + std::to_string(*n));
  }
  if (reader.next()) reader.fail("unexpected content after the last vote line");
  try {
    return Election(std::move(names), std::move(voters));
  } catch (const InvalidInput& e) {
    throw ParseError(source, 1, e.what());
  }
}

Election parse_profile_string(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  return parse_profile(in, source);
}

Election load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_profile(in, path);
}

void write_profile(std::ostream& out, const Election& election) {
  out << election.m() << '\n';
  for (int c = 0; c < election.m(); ++c) {
    out << c + 1 << '\t' << election.name(CandidateId(c)) << '\n';
  }
  std::vector<std::pair<int, int>> runs;  // (first voter, count)
  for (int v = 0; v < election.n(); ++v) {
    if (!runs.empty() && election.voter(v) == election.voter(runs.back().first)) {
      ++runs.back().second;
    } else {
      runs.emplace_back(v, 1);
    }
  }
  out << election.n() << ' ' << runs.size() << '\n';
  for (const auto& [v, count] : runs) {
    out << count << ": ";
    const auto ranking = election.voter(v).ranking();
    for (std::size_t i = 0; i < ranking.size(); ++i) {
      if (i) out << ',';
      out << ranking[i].index() + 1;
    }
    out << '\n';
  }
}

std::string serialize_profile(const Election& election) {
  std::ostringstream out;
  write_profile(out, election);
  return out.str();
}

DissatisfactionFunction parse_alpha(std::string_view descriptor) {
  if (descriptor == "borda") return DissatisfactionFunction::borda();
  for (std::string_view prefix : {"tapproval:", "tapprox:"}) {
    if (descriptor.starts_with(prefix)) {
      const auto t = to_int<int>(descriptor.substr(prefix.size()));
      if (!t || *t < 0) throw InvalidInput("bad t-approval threshold");
      return DissatisfactionFunction::t_approval(*t);
    }
  }
  if (descriptor.starts_with("custom:")) {
    std::vector<Objective> values;
    for (std::string_view item : tokens(descriptor.substr(7))) {
      const auto v = to_int<Objective>(item);
      if (!v) throw InvalidInput("bad custom alpha value '" + std::string(item) + "'");
      values.push_back(*v);
    }
    return DissatisfactionFunction::custom(std::move(values));
  }
  throw InvalidInput("unknown alpha '" + std::string(descriptor) +
                     "' (expected borda, tapproval:T or custom:...)");
}

DissatisfactionFunction load_custom_alpha(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_alpha("custom:" + buffer.str());
}

ClonePartition parse_partition(std::istream& in, const Election& election,
                               const std::string& source) {
  LineReader reader(in, source);
  ClonePartition partition;
  while (auto line = reader.next()) {
    std::vector<CandidateId> set;
    for (std::string_view name : tokens(*line)) {
      const auto c = election.find(name);
      if (!c) reader.fail("unknown candidate '" + std::string(name) + "'");
      set.push_back(*c);
    }
    partition.sets.push_back(std::move(set));
  }
  return partition;
}

ResultDocument make_result_document(const Election& election,
                                    const SolveResult& result,
                                    const DissatisfactionFunction& alpha, int k,
                                    bool with_timing) {
  ResultDocument doc;
  doc.rule = std::string(to_string(result.rule));
  doc.aggregator = std::string(to_string(result.aggregator));
  doc.alpha = alpha.descriptor();
  doc.k = k;
  doc.objective = result.objective;
  for (CandidateId c : result.assignment.committee()) {
    doc.committee.push_back(election.name(c));
  }
  for (CandidateId c : result.assignment.reps()) {
    doc.representatives.push_back(election.name(c));
  }
  const ContiguityReport report = contiguity_report(election, result.assignment);
  doc.contiguous = report.contiguous;
  for (const VoterBlock& b : report.blocks) {
    doc.blocks.push_back({election.name(b.candidate), b.first, b.last});
  }
  doc.solver = result.diagnostics.solver;
  doc.table_dims.assign(result.diagnostics.table_dims.begin(),
                        result.diagnostics.table_dims.end());
  if (with_timing) doc.elapsed_ns = result.diagnostics.elapsed.count();
  return doc;
}

std::string to_json(const ResultDocument& doc) {
  Json j;
  if (doc.voter_order) j["voter_order"] = *doc.voter_order;
  j["rule"] = doc.rule;
  j["aggregator"] = doc.aggregator;
  j["alpha"] = doc.alpha;
  j["k"] = doc.k;
  j["objective"] = doc.objective;
  j["committee"] = doc.committee;
  j["representatives"] = doc.representatives;
  Json blocks = Json::array();
  for (const ResultBlock& b : doc.blocks) {
    Json e;
    e["candidate"] = b.candidate;
    e["first"] = b.first;
    e["last"] = b.last;
    blocks.push_back(std::move(e));
  }
  j["contiguity"] = {{"contiguous", doc.contiguous}, {"blocks", std::move(blocks)}};
  Json diag;
  diag["solver"] = doc.solver;
  diag["table_dims"] = doc.table_dims;
  if (doc.elapsed_ns) diag["elapsed_ns"] = *doc.elapsed_ns;
  j["diagnostics"] = std::move(diag);
  return j.dump(2) + "\n";
}

ResultDocument result_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    ResultDocument doc;
    if (j.contains("voter_order")) doc.voter_order = j["voter_order"].get<std::vector<int>>();
    doc.rule = j.at("rule").get<std::string>();
    doc.aggregator = j.at("aggregator").get<std::string>();
    doc.alpha = j.at("alpha").get<std::string>();
    doc.k = j.at("k").get<int>();
    doc.objective = j.at("objective").get<Objective>();
    doc.committee = j.at("committee").get<std::vector<std::string>>();
    doc.representatives = j.at("representatives").get<std::vector<std::string>>();
    const Json& contiguity = j.at("contiguity");
    doc.contiguous = contiguity.at("contiguous").get<bool>();
    for (const Json& b : contiguity.at("blocks")) {
      doc.blocks.push_back({b.at("candidate").get<std::string>(),
                            b.at("first").get<int>(), b.at("last").get<int>()});
    }
    const Json& diag = j.at("diagnostics");
    doc.solver = diag.at("solver").get<std::string>();
    doc.table_dims = diag.at("table_dims").get<std::vector<std::uint64_t>>();
    if (diag.contains("elapsed_ns")) doc.elapsed_ns = diag["elapsed_ns"].get<std::int64_t>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("<result>", 0, e.what());
  }
}

Assignment revalidate(const ResultDocument& doc, const Election& input) {
  std::optional<Election> reordered;
  if (doc.voter_order) {
    std::vector<int> perm;
    for (int v : *doc.voter_order) {
      if (v < 1 || v > input.n()) throw InvalidInput("voter_order entry out of range");
      perm.push_back(v - 1);
    }
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
      if (sorted[i] != i || sorted.size() != static_cast<std::size_t>(input.n())) {
        throw InvalidInput("voter_order is not a permutation of the voters");
      }
    }
    reordered = input.reordered(perm);
  }
  const Election& election = reordered ? *reordered : input;
  if (static_cast<int>(doc.representatives.size()) != election.n()) {
    throw InvalidInput("document has " + std::to_string(doc.representatives.size()) +
                       " representatives for " + std::to_string(election.n()) +
                       " voters");
  }
  std::vector<CandidateId> reps;
  for (const std::string& name : doc.representatives) {
    const auto c = election.find(name);
    if (!c) throw InvalidInput("unknown candidate '" + name + "' in document");
    reps.push_back(*c);
  }
  Assignment assignment(std::move(reps), doc.k);
  const Rule rule = rule_from(doc.rule);
  if (const ValidationReport report = validate_assignment(election, assignment, rule);
      !report) {
    throw InvalidInput("document assignment is not valid: " + report.violations.front());
  }
  const Objective objective = score(election, assignment, parse_alpha(doc.alpha),
                                    aggregator_from(doc.aggregator));
  if (objective != doc.objective) {
    throw InvalidInput("document objective " + std::to_string(doc.objective) +
                       " does not match rescored " + std::to_string(objective));
  }
  return assignment;
}

std::string reduction_sidecar_json(const ReductionOutput& output) {
  Json j;
  j["original_m"] = output.original.m();
  j["original_n"] = output.original.n();
  j["original_k"] = output.k;
  j["k_sc"] = output.k_sc;
  j["candidates"] = output.sc_election.m();
  j["voters"] = output.sc_election.n();
  Json groups = Json::array();
  for (int c = 0; c < output.sc_election.m(); ++c) {
    const CandidateTag& tag = output.candidate_groups[c];
    Json e;
    e["name"] = output.sc_election.name(CandidateId(c));
    e["group"] = std::string(to_string(tag.group));
    e["set"] = tag.set;
    e["member"] = tag.member;
    groups.push_back(std::move(e));
  }
  j["candidate_groups"] = std::move(groups);
  Json runs = Json::array();
  for (std::size_t v = 0; v < output.voter_lists.size();) {
    std::size_t end = v;
    while (end < output.voter_lists.size() &&
           output.voter_lists[end] == output.voter_lists[v]) {
      ++end;
    }
    runs.push_back({{"list", "V" + std::to_string(output.voter_lists[v])},
                    {"first", v},
                    {"count", end - v}});
    v = end;
  }
  j["voter_lists"] = std::move(runs);
  return j.dump(2) + "\n";
}

}  // namespace fpr
