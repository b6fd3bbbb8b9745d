#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pbr/boolean/bdd.hpp"
#include "pbr/lang/program.hpp"
#include "pbr/paths/path.hpp"
#include "pbr/paths/enumerate.hpp"
#include "pbr/synth/synthesis.hpp"

namespace pbr {

/// A failing path cut at the fault region. The region statements are kept
/// only for reporting; re-checks splice in the current region instead.
struct Counterexample {
  Path prefix;
  std::vector<PathStmt> region;
  Path suffix;
  std::string guard_bits;
};

/// Counterexamples in insertion order, unique by guard bits.
class CounterexampleSet {
 public:
  /// False (and no change) when a path with the same guard bits is present.
  bool add(Counterexample c);
  bool contains(const std::string& guard_bits) const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Counterexample>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

 private:
  std::vector<Counterexample> items_;
};

/// Decomposes a path that traverses the region. Throws RegionNotOnPath otherwise.
Counterexample decompose(const Path& path);

/// Canonical name of the value a region output has when the region ends.
std::string output_name(const std::string& var);

/// Φ = ∧ over counterexamples of sp(φ, π_A) → wp(ψ, π_B), with every SSA
/// version live at region entry renamed to its program variable (x̄) and the
/// region outputs read by π_B renamed to output_name (ȳ).
SynthesisProblem build_phi(const CounterexampleSet& cexs, const Formula& pre, const Formula& post,
                           const std::vector<VarDecl>& inputs, const std::vector<VarDecl>& outputs, unsigned width);

enum class Outcome { Repaired, Unrealizable, RegionNotOnPath, BoundExceeded, ResourceLimit };

std::string to_string(Outcome o);
/// Process exit status for an outcome.
int exit_code(Outcome o);

struct IterationRecord {
  std::string path;
  std::size_t gates = 0;
  bool realizable = true;
  double millis = 0;
};

struct RunReport {
  Outcome outcome = Outcome::Repaired;
  std::vector<IterationRecord> iterations;
  /// Last candidate (the repaired program when outcome is Repaired).
  Program program;
  FaultRegion region;
  std::string message;
  /// Region-entry values without any repair, for Unrealizable.
  std::map<std::string, unsigned long long> witness;
  double total_millis = 0;
};

struct RepairOptions {
  unsigned width = 2;
  unsigned unroll = kDefaultUnrollBound;
  unsigned max_iters = 64;
  std::size_t node_limit = kDefaultNodeLimit;
  /// Annotated counterexamples, relations and candidates go here when set.
  std::ostream* trace = nullptr;
};

/// The repair loop: model check, add the counterexample, synthesize the region
/// from all counterexamples so far, splice in the result, repeat.
///
/// After every splice all earlier counterexamples are re-checked against the
/// new candidate (InternalError if one fails again). Running past max_iters or
/// meeting the same path twice is also an InternalError.
RunReport pbrepair(const Program& p, LineRange region, const RepairOptions& options = {});

}  // namespace pbr
