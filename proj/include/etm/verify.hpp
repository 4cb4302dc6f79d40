#pragma once

#include <string>
#include <vector>

namespace etm {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the acceptance checks, restricted to families with n <= max_n.
/// The full sweep uses max_n = 27. jobs controls census parallelism.
std::vector<CriterionResult> run_acceptance(int max_n, int jobs = 0);

}  // namespace etm
