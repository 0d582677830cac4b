#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ck {

// One verification check.  kind is "exact" for exhaustive or algebraic
// checks, "property-based evidence" for seeded sampling of Zariski-style
// statements, and "observed" for claims the source theory leaves unproved.
struct CheckResult {
  std::string check;  // stable id, e.g. "section1/partition"
  std::string type;   // canonical type string, e.g. "B2xG2"
  std::uint64_t seed = 0;
  int samples = 0;
  bool pass = true;
  std::string kind = "exact";
  std::string witness;  // offending input/output when failing

  void fail(std::string w) {
    pass = false;
    if (witness.empty()) witness = std::move(w);
  }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }

  CheckResult& add(std::string check, std::string type) {
    checks.push_back(CheckResult{std::move(check), std::move(type), 0, 0, true, "exact", ""});
    return checks.back();
  }

  void merge(VerificationReport other) {
    for (CheckResult& c : other.checks) checks.push_back(std::move(c));
  }
};

}  // namespace ck
