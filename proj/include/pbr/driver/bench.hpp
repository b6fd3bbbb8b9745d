#pragma once

#include <string>
#include <vector>

#include "pbr/driver/pbrepair.hpp"
#include "pbr/lang/program.hpp"

namespace pbr {

struct Mutant {
  int line = 0;
  /// "Assignment" or "Condition".
  std::string type;
  /// The changed statement, e.g. `most = input1` or `most > input2`.
  std::string change;
  Program program;
};

/// Single-edit faults of `p`, in statement order: every variable read by an
/// assignment is replaced by each other Word variable, and every comparison in
/// an if guard is flipped (`<` to `<=` and `>`, `==` to `!=`, and so on).
/// Mutants that still pass verify_exhaustive are dropped.
std::vector<Mutant> seed_faults(const Program& p, unsigned width, unsigned unroll_bound);

struct BenchRow {
  Mutant mutant;
  RunReport report;
  /// verify_exhaustive of the final candidate.
  bool verified = false;
};

/// Repairs every mutant with the region set to its mutated statement. Runs
/// share nothing, so up to `jobs` of them proceed at once; rows keep the
/// mutant order.
std::vector<BenchRow> bench(const Program& p, const RepairOptions& options, unsigned jobs = 1);

/// Line | Type | Fault | Iterations | Paths[gates] | Time
std::string bench_table(const std::vector<BenchRow>& rows, bool with_time = true);

}  // namespace pbr
