#include "gjms/report.hpp"

#include <json.hpp>

namespace gjms {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const VerificationReport& r, bool include_elapsed) {
  ordered_json j;
  j["claim"] = r.claim;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["status"] = r.passed ? "pass" : "fail";
  if (r.witness) j["witness"] = *r.witness;
  if (include_elapsed) j["elapsed_ms"] = static_cast<double>(r.elapsed.count()) / 1000.0;
  return j.dump();
}

std::string to_text_line(const VerificationReport& r) {
  std::string line = r.passed ? "PASS " : "FAIL ";
  line += r.claim;
  if (!r.params.empty()) {
    line += " (";
    bool first = true;
    for (const auto& [k, v] : r.params) {
      if (!first) line += ", ";
      line += k + "=" + v;
      first = false;
    }
    line += ")";
  }
  if (!r.passed && r.witness) line += " witness: " + *r.witness;
  return line;
}

std::string to_csv_row(const VerificationReport& r) {
  std::string params;
  for (const auto& [k, v] : r.params) {
    if (!params.empty()) params += ';';
    params += k + "=" + v;
  }
  std::string row = r.claim + "," + params + "," + (r.passed ? "pass" : "fail") + ",";
  if (!r.passed && r.witness) {
    std::string w = *r.witness;
    for (char& c : w) {
      if (c == ',') c = ';';  // CSV cells stay comma-free
    }
    row += w;
  }
  return row;
}

}  // namespace gjms
