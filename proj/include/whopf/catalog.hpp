#pragma once

#include <string>
#include <vector>

namespace whopf {

// A checkable identity: the label used in reports and the formula it asserts.
// Composition is written '.', tensor '@', convolution '*'.
struct IdentityEntry {
  std::string module;
  std::string label;
  std::string formula;
};

const std::vector<IdentityEntry>& identity_catalog();
// One line per entry: "module  label  :  formula".
std::string catalog_text();

}  // namespace whopf
