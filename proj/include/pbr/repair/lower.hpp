#pragma once

#include <set>
#include <string>
#include <vector>

#include "pbr/lang/program.hpp"
#include "pbr/synth/synthesis.hpp"

namespace pbr {

/// Source statements computing a netlist. Inputs are read bit by bit into
/// fresh word variables holding 0 or 1, every AND gate becomes one `&`
/// assignment (complemented literals as `(1 - a)`), and each output word is
/// recomposed from its bits. Whole-word copies and constants are emitted
/// directly. `outputs` are the program variables behind netlist.y_vars, in the
/// same order; netlist inputs are named by their program variables. Fresh
/// names avoid everything in `taken`.
///
/// Throws Error when a Bool input feeds a gate or a Word output, which the
/// language cannot convert.
std::vector<Stmt> netlist_to_stmts(const RepairNetlist& netlist, const std::vector<VarDecl>& outputs, unsigned width,
                                   const std::set<std::string>& taken);

struct RepairedProgram {
  Program program;
  FaultRegion region;
};

/// Replaces the statements of `region` by `stmts` and renumbers. The returned
/// region spans the new statements and keeps the outputs.
RepairedProgram apply_repair(const Program& p, const FaultRegion& region, const std::vector<Stmt>& stmts);

/// Variables mentioned by statements outside `region`, by pre/post, and the parameters.
std::set<std::string> names_outside(const Program& p, const LineRange& region);

}  // namespace pbr
