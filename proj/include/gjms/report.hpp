#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gjms {

/// Outcome of one symbolic or spectral identity check. A failed check
/// always carries a witness: the first nonzero monomial of the difference,
/// or the first mode where two operator applications disagree.
struct VerificationReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  bool passed = false;
  std::optional<std::string> witness;
  std::chrono::microseconds elapsed{0};

  bool valid() const { return passed || witness.has_value(); }
};

/// {"claim":..., "params":{...}, "status":"pass"|"fail"[, "witness":...]
///  [, "elapsed_ms":...]}. elapsed_ms is off by default so that data
/// output stays byte-identical across runs.
std::string to_json(const VerificationReport& r, bool include_elapsed = false);

/// "PASS claim (k=v, ...)" or "FAIL claim (k=v, ...) witness: ...".
std::string to_text_line(const VerificationReport& r);

inline constexpr const char* kReportCsvHeader = "claim,params,status,witness";

/// CSV row matching kReportCsvHeader; params joined as k=v with ';'.
std::string to_csv_row(const VerificationReport& r);

}  // namespace gjms
