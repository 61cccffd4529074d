#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace fpcyc {

/// One checked relation instance. `name` holds no whitespace.
struct RelationCheck {
  std::string name;
  bool passed = false;
  std::string witness;  // counterexample detail on failure
};

struct Report {
  std::vector<RelationCheck> checks;
  std::vector<std::string> notes;

  void add(std::string name, bool passed, std::string witness = {}) {
    checks.push_back({std::move(name), passed, std::move(witness)});
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
  }
  bool all_passed() const { return failures() == 0; }

  /// `RELATION <name> PASS|FAIL <witness>` per check, then `NOTE <text>`.
  std::string to_lines() const {
    std::string out;
    for (const auto& c : checks) {
      out += "RELATION " + c.name + (c.passed ? " PASS" : " FAIL");
      out += ' ';
      out += c.witness.empty() ? "-" : c.witness;
      out += '\n';
    }
    for (const auto& n : notes) out += "NOTE " + n + '\n';
    return out;
  }
};

}  // namespace fpcyc
