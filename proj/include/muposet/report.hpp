#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace muposet {

// One formula-vs-oracle disagreement found by a verification campaign.
struct Mismatch {
  std::string pi;
  std::optional<std::string> sigma;       // lower bound, when the check has one
  long long formula_value = 0;
  long long oracle_value = 0;
  std::optional<std::string> case_label;  // which rule or branch fired

  bool operator==(const Mismatch&) const = default;
};

struct VerificationReport {
  std::string campaign;
  std::map<std::string, long long> parameters;  // sweep bounds and counters
  long long total_checked = 0;
  long long passed = 0;
  long long failed = 0;
  std::vector<Mismatch> mismatches;
  long long runtime_ms = 0;

  bool operator==(const VerificationReport&) const = default;
};

// JSON serialization round-trips; CSV and text are one-way renderings.
std::string to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);
std::string to_csv(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace muposet
