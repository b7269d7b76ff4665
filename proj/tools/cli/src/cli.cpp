#include "fpr/cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "fpr/cc_solver.hpp"
#include "fpr/domains.hpp"
#include "fpr/error.hpp"
#include "fpr/instances.hpp"
#include "fpr/monroe_solver.hpp"
#include "fpr/oracle.hpp"
#include "fpr/profile_io.hpp"
#include "fpr/reduction.hpp"
#include "fpr/verify/acceptance.hpp"

namespace fpr::cli {

namespace {

struct SolveOptions {
  std::string profile = "-";
  int k = 0;
  std::string alpha = "borda";
  std::string agg = "sum";
  bool auto_order = false;
  bool timing = false;
};

void add_solve_options(CLI::App* sub, SolveOptions& o) {
  sub->add_option("profile", o.profile, "Profile file ('-' or omitted: stdin)");
  sub->add_option("--k", o.k, "Committee size")->required();
  sub->add_option("--alpha", o.alpha,
                  "borda | tapprox:T | tapproval:T | custom:FILE | custom:v1,v2,...")
      ->capture_default_str();
  sub->add_option("--agg", o.agg, "Aggregator")
      ->check(CLI::IsMember({"sum", "max"}))
      ->capture_default_str();
  sub->add_flag("--timing", o.timing, "Include elapsed time in the result document");
}

Aggregator to_aggregator(const std::string& s) {
  return s == "max" ? Aggregator::kMax : Aggregator::kSum;
}

DissatisfactionFunction resolve_alpha(const std::string& descriptor) {
  if (descriptor.starts_with("custom:")) {
    const std::string path = descriptor.substr(7);
    std::error_code ec;
    if (std::filesystem::is_regular_file(path, ec)) return load_custom_alpha(path);
  }
  return parse_alpha(descriptor);
}

Election read_election(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return parse_profile(in, "<stdin>");
  return load_profile(path);
}

// The election the solver sees, plus the 1-based input order of its voters
// when --auto-order had to permute them.
struct Prepared {
  Election election;
  std::optional<std::vector<int>> order;
};

Prepared order_for(const Election& input, const Election& probe, bool auto_order,
                   std::ostream& err) {
  if (!auto_order || check_single_crossing(probe)) return {input, std::nullopt};
  const auto perm = find_single_crossing_order(probe);
  if (!perm) {
    throw DomainViolation("no voter order makes the profile single-crossing");
  }
  err << "note: voters reordered to a single-crossing order\n";
  std::vector<int> one_based;
  for (int v : *perm) one_based.push_back(v + 1);
  return {input.reordered(*perm), std::move(one_based)};
}

int emit(const Election& input, const Prepared& prepared, const SolveResult& result,
         const DissatisfactionFunction& alpha, int k, bool timing, std::ostream& out) {
  ResultDocument doc = make_result_document(prepared.election, result, alpha, k, timing);
  doc.voter_order = prepared.order;
  revalidate(doc, input);  // never print an objective that does not rescore
  out << to_json(doc);
  return kOk;
}

int solve_cc_command(const SolveOptions& o, const std::string& partition_path,
                     std::istream& in, std::ostream& out, std::ostream& err) {
  const Election input = read_election(o.profile, in);
  const DissatisfactionFunction alpha = resolve_alpha(o.alpha);
  const Aggregator agg = to_aggregator(o.agg);
  if (partition_path.empty()) {
    const Prepared p = order_for(input, input, o.auto_order, err);
    return emit(input, p, solve_cc(p.election, o.k, alpha, agg), alpha, o.k, o.timing,
                out);
  }
  std::ifstream file(partition_path);
  if (!file) throw ParseError(partition_path, 0, "cannot open file");
  const ClonePartition partition = parse_partition(file, input, partition_path);
  if (!verify_clone_partition(input, partition)) {
    throw InvalidInput("partition sets are not clone sets of the election");
  }
  const Election contracted =
      contract_clones(input, normalize_partition(input, partition));
  const Prepared p = order_for(input, contracted, o.auto_order, err);
  return emit(input, p, solve_cc_width(p.election, partition, o.k, alpha, agg), alpha,
              o.k, o.timing, out);
}

int solve_monroe_command(const SolveOptions& o, bool oracle, std::istream& in,
                         std::ostream& out, std::ostream& err) {
  const Election input = read_election(o.profile, in);
  const DissatisfactionFunction alpha = resolve_alpha(o.alpha);
  const Aggregator agg = to_aggregator(o.agg);
  if (oracle) {
    const Prepared p{input, std::nullopt};
    return emit(input, p, solve_monroe_bruteforce(input, o.k, alpha, agg), alpha, o.k,
                o.timing, out);
  }
  if (agg != Aggregator::kMax) {
    throw DomainViolation(
        "the Monroe dynamic program covers only --agg max on narcissistic "
        "single-crossing profiles; pass --oracle for exhaustive search");
  }
  const Prepared p = order_for(input, input, o.auto_order, err);
  return emit(input, p, solve_monroe_egalitarian_sc_narcissistic(p.election, o.k, alpha),
              alpha, o.k, o.timing, out);
}

int oracle_command(const SolveOptions& o, const std::string& rule, bool contiguous,
                   std::istream& in, std::ostream& out) {
  const Election input = read_election(o.profile, in);
  const DissatisfactionFunction alpha = resolve_alpha(o.alpha);
  const Aggregator agg = to_aggregator(o.agg);
  const Rule r = rule == "monroe" ? Rule::kMonroe : Rule::kCC;
  SolveResult result;
  if (contiguous) {
    result = best_contiguous_bruteforce(input, o.k, alpha, agg, r);
  } else if (r == Rule::kMonroe) {
    result = solve_monroe_bruteforce(input, o.k, alpha, agg);
  } else {
    result = solve_cc_bruteforce(input, o.k, alpha, agg);
  }
  return emit(input, {input, std::nullopt}, result, alpha, o.k, o.timing, out);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_names(const Election& e, std::span<const CandidateId> ids) {
  std::string s;
  for (CandidateId c : ids) s += (s.empty() ? "" : " ") + e.name(c);
  return s;
}

int check_domain_command(const std::string& path, std::istream& in, std::ostream& out) {
  const Election e = read_election(path, in);
  const bool sc = check_single_crossing(e);
  out << "single-crossing: " << yes_no(sc) << '\n';
  if (!sc) {
    const auto perm = find_single_crossing_order(e);
    out << "single-crossing order: ";
    if (perm) {
      for (std::size_t i = 0; i < perm->size(); ++i) out << (i ? "," : "") << (*perm)[i] + 1;
      out << '\n';
    } else {
      out << "none\n";
    }
  }
  out << "narcissistic: " << yes_no(check_narcissistic(e)) << '\n';
  try {
    const auto axis = find_single_peaked_axis_bruteforce(e);
    out << "single-peaked: " << yes_no(axis.has_value());
    if (axis) out << " (axis: " << join_names(e, axis->order()) << ")";
    out << '\n';
  } catch (const SizeLimit&) {
    out << "single-peaked: unknown (axis search limited to m <= 8)\n";
  }
  try {
    const WidthResult w = compute_width_bruteforce(e);
    out << "single-crossing width: " << w.width << '\n';
  } catch (const SizeLimit&) {
    out << "single-crossing width: unknown (search limited to m <= 10)\n";
  } catch (const DomainViolation&) {
    out << "single-crossing width: none\n";
  }
  return kOk;
}

int reduce_command(const std::string& path, int k, const std::string& out_path,
                   std::string sidecar_path, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  const Election e = read_election(path, in);
  const ReductionOutput red = build_monroe_reduction(e, k);
  if (out_path.empty()) {
    write_profile(out, red.sc_election);
  } else {
    std::ofstream file(out_path);
    write_profile(file, red.sc_election);
    if (sidecar_path.empty()) sidecar_path = out_path + ".groups.json";
  }
  if (sidecar_path.empty()) {
    err << "note: group index not written (pass --sidecar FILE)\n";
  } else {
    std::ofstream(sidecar_path) << reduction_sidecar_json(red);
  }
  err << "reduced instance: " << red.sc_election.m() << " candidates, "
      << red.sc_election.n() << " voters, k_sc = " << red.k_sc << '\n';
  return kOk;
}

struct GenOptions {
  std::string kind;
  int m = 3;
  int n = 4;
  std::uint64_t seed = 1;
  std::string partition_out;
};

int gen_command(const GenOptions& g, std::ostream& out) {
  if (g.kind == "example1") {
    write_profile(out, gen_example_sc_gap(g.m, g.n));
  } else if (g.kind == "example2") {
    write_profile(out, gen_example_narcissistic_util());
  } else if (g.kind == "example3") {
    write_profile(out, gen_example_sp(g.m));
  } else if (g.kind == "random-sc") {
    write_profile(out, gen_random_single_crossing(g.m, g.n, g.seed));
  } else if (g.kind == "random-scn") {
    write_profile(out, gen_random_sc_narcissistic(g.m, g.n, g.seed));
  } else {  // cloned
    const ClonedInstance ci =
        gen_cloned_pairs(gen_random_single_crossing(g.m, g.n, g.seed), g.seed);
    write_profile(out, ci.election);
    if (!g.partition_out.empty()) {
      std::ofstream file(g.partition_out);
      for (const auto& set : ci.partition.sets) {
        file << join_names(ci.election, set) << '\n';
      }
    }
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Chamberlin-Courant and Monroe winner determination", "fpr"};
  app.require_subcommand(1);

  SolveOptions cc_opts;
  std::string partition;
  auto* cc = app.add_subcommand("solve-cc", "CC dynamic program (single-crossing input)");
  add_solve_options(cc, cc_opts);
  cc->add_option("--width-partition", partition, "Clone partition file");
  cc->add_flag("--auto-order", cc_opts.auto_order,
               "Reorder voters into a single-crossing order if needed");

  SolveOptions monroe_opts;
  bool force_oracle = false;
  auto* monroe = app.add_subcommand(
      "solve-monroe", "Egalitarian Monroe dynamic program (narcissistic single-crossing)");
  add_solve_options(monroe, monroe_opts);
  monroe->add_flag("--oracle", force_oracle, "Use exhaustive search instead");
  monroe->add_flag("--auto-order", monroe_opts.auto_order,
                   "Reorder voters into a single-crossing order if needed");

  SolveOptions oracle_opts;
  std::string rule = "cc";
  bool contiguous = false;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive search for either rule");
  add_solve_options(oracle, oracle_opts);
  oracle->add_option("--rule", rule, "Voting rule")
      ->check(CLI::IsMember({"cc", "monroe"}))
      ->capture_default_str();
  oracle->add_flag("--contiguous", contiguous,
                   "Restrict to assignments with contiguous voter intervals");

  std::string domain_path = "-";
  auto* domain = app.add_subcommand("check-domain", "Report preference-domain properties");
  domain->add_option("profile", domain_path, "Profile file ('-' or omitted: stdin)");

  std::string reduce_path = "-", reduce_out, sidecar;
  int reduce_k = 0;
  auto* reduce = app.add_subcommand(
      "reduce", "Build the single-crossing Monroe instance encoding a profile");
  reduce->add_option("profile", reduce_path, "Profile file ('-' or omitted: stdin)");
  reduce->add_option("--k", reduce_k, "Committee size of the source instance")->required();
  reduce->add_option("--out", reduce_out, "Write the profile here instead of stdout");
  reduce->add_option("--sidecar", sidecar,
                     "Group index JSON (default with --out: OUT.groups.json)");

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate an example or random profile");
  gen->add_option("kind", gen_opts.kind, "Generator")
      ->required()
      ->check(CLI::IsMember(
          {"example1", "example2", "example3", "random-sc", "random-scn", "cloned"}));
  gen->add_option("--m", gen_opts.m, "Candidates (example1/3: |A| = |B| or x/y count)")
      ->capture_default_str();
  gen->add_option("--n", gen_opts.n, "Voters (example1: voters per group)")
      ->capture_default_str();
  gen->add_option("--seed", gen_opts.seed, "Seed for random generators")
      ->capture_default_str();
  gen->add_option("--partition-out", gen_opts.partition_out,
                  "cloned: write the clone partition here");

  std::vector<int> only;
  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance suite");
  verify->add_option("--only", only, "Run only these criteria (1-11)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (cc->parsed()) return solve_cc_command(cc_opts, partition, in, out, err);
    if (monroe->parsed()) {
      return solve_monroe_command(monroe_opts, force_oracle, in, out, err);
    }
    if (oracle->parsed()) return oracle_command(oracle_opts, rule, contiguous, in, out);
    if (domain->parsed()) return check_domain_command(domain_path, in, out);
    if (reduce->parsed()) {
      return reduce_command(reduce_path, reduce_k, reduce_out, sidecar, in, out, err);
    }
    if (gen->parsed()) return gen_command(gen_opts, out);
    if (verify->parsed()) {
      const auto results =
          verify::run_acceptance(only, OracleConfig::from_env(), out);
      const auto passed = std::count_if(results.begin(), results.end(),
                                        [](const auto& r) { return r.passed; });
      out << passed << "/" << results.size() << " criteria passed\n";
      return passed == static_cast<long>(results.size()) ? kOk : kFailure;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainViolation& e) {
    err << "domain violation: " << e.what() << '\n';
    return kDomainViolation;
  } catch (const SizeLimit& e) {
    err << "size limit: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace fpr::cli
