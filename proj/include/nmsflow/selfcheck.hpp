#pragma once

#include <string>
#include <vector>

#include "nmsflow/arith.hpp"

namespace nmsflow {

/// A hard invariant. Any failure makes the self-check fail.
struct CheckResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

/// A convention-sensitive comparison. Disagreements are reported, never
/// counted as failures.
struct Diagnostic {
  std::string name;
  std::size_t compared = 0;
  std::size_t agreements = 0;
  std::vector<std::string> samples;
};

struct SelfcheckReport {
  Int bound = 0;
  std::vector<CheckResult> checks;
  std::vector<Diagnostic> diagnostics;

  std::size_t hard_failures() const;
  bool ok() const { return hard_failures() == 0; }
};

/// Runs every cross-validation over the classifier outputs with entries
/// bounded by `bound`.
SelfcheckReport run_selfcheck(Int bound);

/// Plain-text table: one line per check, then the diagnostic section.
std::string format_report(const SelfcheckReport& r);

}  // namespace nmsflow
