#pragma once

#include <string>
#include <vector>

#include "whopf/linmap.hpp"

namespace whopf {

struct Check {
  std::string label;
  bool pass = false;
  std::string detail;  // witness basis vector or reason on failure
};

struct Report {
  std::string title;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  explicit Report(std::string t = "") : title(std::move(t)) {}

  bool expect_equal(const std::string& label, const LinMap& lhs, const LinMap& rhs);
  bool expect(const std::string& label, bool ok, const std::string& detail = "");
  void note(const std::string& n) { notes.push_back(n); }
  // Appends the checks of another report, prefixing their labels.
  void merge(const Report& other, const std::string& prefix = "");

  bool ok() const;
  const Check* find(const std::string& label) const;
  bool passed(const std::string& label) const;
  std::vector<std::string> failures() const;
  std::string to_text() const;
};

}  // namespace whopf
