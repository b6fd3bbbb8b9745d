#include "pbr/driver/report.hpp"

#include <json.hpp>

#include "pbr/lang/printer.hpp"

namespace pbr {
namespace {

nlohmann::ordered_json to_json(const RunReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["outcome"] = to_string(r.outcome);
  auto iterations = nlohmann::ordered_json::array();
  for (const auto& it : r.iterations) {
    nlohmann::ordered_json row;
    row["path"] = it.path;
    row["gates"] = it.gates;
    row["realizable"] = it.realizable;
    if (with_timing) row["millis"] = it.millis;
    iterations.push_back(std::move(row));
  }
  j["iterations"] = std::move(iterations);
  if (with_timing) j["total_millis"] = r.total_millis;
  j["program"] = emit(r.program);
  j["region"] = {r.region.lines.first, r.region.lines.last};
  if (!r.message.empty()) j["message"] = r.message;
  if (r.outcome == Outcome::Unrealizable) j["witness"] = r.witness;
  return j;
}

}  // namespace

std::string report_json(const RunReport& report, bool with_timing) {
  return to_json(report, with_timing).dump(2) + "\n";
}

std::string bench_json(const std::vector<BenchRow>& rows, bool with_timing) {
  nlohmann::ordered_json j;
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["line"] = r.mutant.line;
    row["type"] = r.mutant.type;
    row["fault"] = r.mutant.change;
    row["verified"] = r.verified;
    row["report"] = to_json(r.report, with_timing);
    out.push_back(std::move(row));
  }
  j["rows"] = std::move(out);
  return j.dump(2) + "\n";
}

}  // namespace pbr
