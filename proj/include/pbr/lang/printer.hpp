#pragma once

#include <string>

#include "pbr/lang/program.hpp"

namespace pbr {

/// Source syntax with the minimum parentheses needed to re-parse identically.
std::string to_source(const Expr& e);

/// Pretty-prints a program; `parse_program(emit(p), w)` reproduces `p`.
std::string emit(const Program& p);

/// One statement without its body, e.g. `if (most < input2)`.
std::string statement_header(const Stmt& s);

}  // namespace pbr
