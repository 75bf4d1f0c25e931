#pragma once

#include <string>
#include <vector>

namespace distgroup {

// One verification check: how many instances were tested, how many failed,
// and a minimal witness for the first failure.
struct CheckResult {
  std::string name;
  unsigned long long instances = 0;
  unsigned long long failures = 0;
  std::string witness;

  bool passed() const { return failures == 0; }

  void hit(bool ok, const std::string& w) {
    ++instances;
    if (!ok) {
      if (failures == 0) witness = w;
      ++failures;
    }
  }
};

}  // namespace distgroup
