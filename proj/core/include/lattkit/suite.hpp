#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lattkit::suite {

struct SuiteOptions {
  std::size_t max_triples = 1000000;
  std::size_t max_congruences = 100000;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // witnesses, per-lattice outcomes, first failure
};

// Runs every acceptance criterion.  Each criterion catches its own
// exceptions and reports them as a failure instead of aborting the run.
std::vector<CriterionResult> run_all(const SuiteOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

// One line per criterion plus a summary line; returns all_passed.
bool print_results(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace lattkit::suite
