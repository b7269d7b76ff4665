#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fpr/oracle.hpp"

namespace fpr::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Ids of every acceptance criterion, 1..11.
std::vector<int> acceptance_ids();

/// Runs one criterion. Unexpected exceptions are reported as failures.
CriterionResult run_criterion(int id, const OracleConfig& config);

/// Runs the selected criteria (all when `only` is empty), printing one line
/// per criterion to `out` as each finishes.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only,
                                            const OracleConfig& config,
                                            std::ostream& out);

/// "[PASS] 4  <title>: <detail> (1.23 s)"
std::string format_result(const CriterionResult& result);

}  // namespace fpr::verify
