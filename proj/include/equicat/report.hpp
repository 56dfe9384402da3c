#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace equicat {

/// One named verification with its outcome. A witness is present exactly
/// when the check failed and points into the offending tables.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;
  double millis = 0.0;  // informational only; never serialized to JSON
};

struct Report {
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string witness = "",
           double millis = 0.0) {
    checks.push_back({std::move(name), pass, std::move(witness), millis});
  }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
  }
  int failed_count() const {
    return static_cast<int>(std::count_if(
        checks.begin(), checks.end(),
        [](const CheckResult& c) { return !c.pass; }));
  }
  /// Reports are assembled order-independently and sorted for output.
  void sort_by_name() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                       return a.name < b.name;
                     });
  }
};

}  // namespace equicat
