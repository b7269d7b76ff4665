// Acceptance runner: one line per criterion, nonzero exit if any fails.
#include <iostream>

#include "CLI11.hpp"
#include "fpr/verify/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fpr acceptance suite", "fpr_acceptance"};
  std::vector<int> only;
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);

  const auto results =
      fpr::verify::run_acceptance(only, fpr::OracleConfig::from_env(), std::cout);
  int failed = 0;
  for (const auto& r : results) failed += !r.passed;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
