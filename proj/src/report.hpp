#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace whcx {

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct Report {
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void add(std::string name, bool pass, std::string witness = {}) {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }
  void append(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

// Raised when a construction needs a check that failed; carries the check name.
struct CheckFailed : std::runtime_error {
  CheckFailed(const std::string& name, const std::string& witness)
      : std::runtime_error(name + (witness.empty() ? "" : " (witness " + witness + ")")), check(name) {}
  std::string check;
};

struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string tuple_str(const std::vector<int>& t);
// "(e_1,e_2,...)" with 1-based indices.
std::string basis_witness(const std::vector<int>& idx);

}  // namespace whcx
