#pragma once
// Outcome of an identity sweep: what was checked and what went wrong.

#include <string>
#include <vector>

namespace reflect {

struct Report {
  std::string identity;
  std::string range;
  long checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  std::vector<std::vector<std::string>> rows;  // per-item table, canonical order
  bool pass() const { return violations.empty(); }
  void merge(const Report& o) {
    checked += o.checked;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    warnings.insert(warnings.end(), o.warnings.begin(), o.warnings.end());
    rows.insert(rows.end(), o.rows.begin(), o.rows.end());
  }
};

}  // namespace reflect
