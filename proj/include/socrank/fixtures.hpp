#pragma once

#include <string>
#include <vector>

namespace socrank {

/// One encoded fixture from the reproduction suite. Disputed fixtures
/// record the verdicts actually computed together with the stored
/// replacement witness; `passed` then reports whether those hold.
struct FixtureResult {
  std::string id;
  bool disputed = false;
  bool passed = false;
  int assertions = 0;
  std::vector<std::string> failures;  // failed assertion descriptions
};

struct FixtureReport {
  std::vector<FixtureResult> entries;

  int assertion_count() const;
  int disputed_count() const;
  /// True iff every non-disputed fixture passed (disputed fixtures must
  /// still confirm their replacement witnesses).
  bool ok() const;
};

/// Replays every encoded source fixture and returns the assertion report.
FixtureReport run_fixture_suite();

}  // namespace socrank
