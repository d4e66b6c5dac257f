#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hyperpath {

struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

// Structured pass/fail evidence. `replay` records whatever is needed to
// regenerate the subject (generator spec, seed); `witnesses` holds inline
// paths, counterexamples or violation details.
struct VerificationReport {
  std::string subject;
  std::string replay;
  std::vector<Check> checks;
  std::vector<std::string> witnesses;

  Check& add(std::string name, std::string expected, std::string observed, bool pass);

  bool passed() const;
  // True when some failing check's name starts with `prefix`.
  bool any_failed(std::string_view prefix) const;
  const Check* find(std::string_view name) const;

  // Stable line-oriented rendering.
  std::string to_text() const;
};

}  // namespace hyperpath
