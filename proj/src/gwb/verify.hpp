#pragma once

// Every module's exhaustive checks at one size bound, for `verify-all`.

#include <string>
#include <vector>

namespace gwb::verify {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::string detail;
  double seconds = 0;
};

struct Summary {
  int d = 0;
  bool pass = true;
  std::vector<SuiteResult> suites;
};

/// Suites at bound d: rings and orbitality up to d, pullbacks and Mackey
/// functors up to min(d, 4), cube diagrams up to min(d, 5).
Summary verify_all(int d, unsigned random_diagrams_per_shape = 20);

}  // namespace gwb::verify
