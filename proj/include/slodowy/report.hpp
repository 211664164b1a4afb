#pragma once

#include <string>
#include <utility>
#include <vector>

namespace slodowy {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Named pass/fail checks plus free-form diagnostic notes.
struct Report {
  std::string subject;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> notes;

  void add(std::string name, bool ok, std::string detail = "") {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void note(std::string key, std::string value) { notes.emplace_back(std::move(key), std::move(value)); }
  bool all() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

}  // namespace slodowy
