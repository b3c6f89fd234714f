// Dedicated acceptance binary: runs every suite criterion, prints one
// PASS/FAIL line per criterion, exits nonzero when any criterion fails.
#include <iostream>

#include "lattkit/suite.hpp"

int main() {
  auto results = lattkit::suite::run_all();
  bool ok = lattkit::suite::print_results(std::cout, results);
  return ok ? 0 : 1;
}
