#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hookline {

enum class CheckStatus { pass, fail, known_discrepancy };

std::string_view status_name(CheckStatus s);  // "pass", "fail", "known-discrepancy"

struct CheckRecord {
  std::string check_id;
  std::string parameter;  // e.g. "n=7"
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::pass;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> records;
  double elapsed_seconds = 0;

  /// True iff no record failed; known discrepancies do not fail a suite.
  bool passed() const;
  int count(CheckStatus s) const;
};

struct SuiteInfo {
  std::string id;
  std::string summary;
  int default_bound;  // the bound verify() uses when none is given
};

/// Every registered suite, in the order "all" runs them.
const std::vector<SuiteInfo>& suites();

/// Runs one suite (or "all"). `bound` caps the suite's size parameter; when
/// absent each suite uses its default bound, and "all" runs each suite at
/// min(bound, default). Brute-force permutation oracles never go beyond
/// n = 9 and the Robinson-Schensted round trip beyond n = 8. Independent
/// checks are spread over `jobs` threads; the records come back in the same
/// order regardless. Throws InputError for an unknown suite id.
VerificationReport verify(std::string_view suite, std::optional<int> bound = std::nullopt,
                          int jobs = 1);

/// One line per record plus a summary line.
std::string format_report(const VerificationReport& report, bool failures_only = false);

}  // namespace hookline
