#pragma once

#include "pbr/lang/program.hpp"

namespace pbr {

struct PreprocessedProgram {
  Program program;
  FaultRegion region;
};

/// Prepares a fault region for repair. An `if (c)` whose guard lies in the
/// region becomes `t = c; if (t)` with a fresh bool temporary `t`, and the
/// region is retargeted at that assignment. Idempotent.
///
/// Throws RegionError when the region is out of range, crosses a block
/// boundary, sits inside a loop body, covers a loop guard or contains
/// statements other than assignments after rewriting.
PreprocessedProgram preprocess_guards(const Program& p, LineRange region);

/// Name not used by any variable of `p`, of the form `<stem><k>`.
std::string fresh_variable(const Program& p, const std::string& stem);

}  // namespace pbr
