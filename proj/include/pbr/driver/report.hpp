#pragma once

#include <string>
#include <vector>

#include "pbr/driver/bench.hpp"
#include "pbr/driver/pbrepair.hpp"

namespace pbr {

/// {outcome, iterations: [{path, gates, realizable, millis}], total_millis,
/// program, region, message?, witness?}. Timing fields are left out when
/// `with_timing` is false.
std::string report_json(const RunReport& report, bool with_timing = true);

/// {rows: [{line, type, fault, verified, report}]}.
std::string bench_json(const std::vector<BenchRow>& rows, bool with_timing = true);

}  // namespace pbr
