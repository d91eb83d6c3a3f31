#pragma once

#include <string>
#include <vector>

namespace coalg {

struct Check {
  std::string name;
  bool passed = true;
  /// Basis element (or tensor of basis elements) where the identity first
  /// fails; empty on success.
  std::string witness;
};

/// Outcome of a validation suite: one entry per identity checked.
struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string witness = {}) {
    checks.push_back({std::move(name), passed, passed ? std::string() : std::move(witness)});
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

}  // namespace coalg
