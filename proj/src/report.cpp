#include "whopf/report.hpp"

#include <sstream>

namespace whopf {

bool Report::expect_equal(const std::string& label, const LinMap& lhs, const LinMap& rhs) {
  Check c{label, false, ""};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    c.detail = "shape " + lhs.dom().name() + "->" + lhs.cod().name() + " vs " + rhs.dom().name() + "->" +
               rhs.cod().name();
  } else if (auto col = first_difference(lhs, rhs)) {
    c.detail = "differs on " + lhs.dom().basis_label(*col);
  } else {
    c.pass = true;
  }
  checks.push_back(c);
  return c.pass;
}

bool Report::expect(const std::string& label, bool ok, const std::string& detail) {
  checks.push_back(Check{label, ok, ok ? "" : detail});
  return ok;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back(Check{prefix + c.label, c.pass, c.detail});
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const Check* Report::find(const std::string& label) const {
  for (const auto& c : checks)
    if (c.label == label) return &c;
  return nullptr;
}

bool Report::passed(const std::string& label) const {
  const Check* c = find(label);
  return c && c->pass;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.label);
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (!title.empty()) os << "== " << title << "\n";
  for (const auto& c : checks) {
    os << (c.pass ? "  pass  " : "  FAIL  ") << c.label;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  for (const auto& n : notes) os << "  note  " << n << "\n";
  return os.str();
}

}  // namespace whopf
