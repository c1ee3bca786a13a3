#include "coxeter2d/report_json.hpp"

#include <limits>

namespace coxeter2d {

nlohmann::json json_of_big(const BigInt& value) {
  if (value >= 0 && value <= BigInt(std::numeric_limits<uint64_t>::max())) {
    return value.convert_to<uint64_t>();
  }
  return value.str();
}

nlohmann::json json_of(const GF2Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m.to_rows()) rows.push_back(row);
  return rows;
}

nlohmann::json json_of(const VerificationReport& report) {
  nlohmann::json orders;
  orders["recursive"] = json_of_big(report.recursive_order);
  if (report.bruteforce_order) orders["bruteforce"] = json_of_big(*report.bruteforce_order);
  if (report.presentation_order) {
    orders["presentation"] = json_of_big(*report.presentation_order);
  }
  if (report.closure_order) orders["closure"] = json_of_big(*report.closure_order);

  nlohmann::json j;
  j["lambda"] = report.lambda.str();
  j["mu"] = report.mu.str();
  j["orders"] = orders;
  if (report.image_check) j["image_check"] = *report.image_check;
  j["verdict"] = verdict_str(report.verdict);
  if (report.verdict == Verdict::Skipped) j["reason"] = report.reason;
  return j;
}

nlohmann::json json_of(const CosetRepReport& report) {
  nlohmann::json j;
  j["distinct"] = report.distinct;
  j["covering"] = report.covering;
  j["count"] = report.count;
  j["num_cosets"] = report.num_cosets;
  return j;
}

nlohmann::json json_of(const HomomorphismReport& report, int n) {
  nlohmann::json j;
  j["n"] = n;
  j["ok"] = report.ok;
  if (report.failing_relator) j["failing_relator"] = word_str(*report.failing_relator);
  return j;
}

}  // namespace coxeter2d
