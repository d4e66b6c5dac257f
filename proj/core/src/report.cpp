#include "hyperpath/report.hpp"

#include <algorithm>

namespace hyperpath {

Check& VerificationReport::add(std::string name, std::string expected, std::string observed,
                               bool pass) {
  checks.push_back(Check{std::move(name), std::move(expected), std::move(observed), pass});
  return checks.back();
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool VerificationReport::any_failed(std::string_view prefix) const {
  return std::any_of(checks.begin(), checks.end(), [&](const Check& c) {
    return !c.pass && std::string_view(c.name).substr(0, prefix.size()) == prefix;
  });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::string out = "subject: " + subject + "\n";
  if (!replay.empty()) out += "replay: " + replay + "\n";
  for (const auto& c : checks) {
    out += (c.pass ? "PASS " : "FAIL ") + c.name + " expected=" + c.expected +
           " observed=" + c.observed + "\n";
  }
  for (const auto& w : witnesses) out += "witness: " + w + "\n";
  out += std::string("result: ") + (passed() ? "pass" : "fail") + "\n";
  return out;
}

}  // namespace hyperpath
