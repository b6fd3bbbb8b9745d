#pragma once

#include <map>
#include <string>
#include <string_view>

#include "pbr/lang/program.hpp"

namespace pbr {

constexpr unsigned kMaxWidth = 32;

/// Parses and sort-checks a program. Locals are declared by assignment; their
/// sort is the sort of the assigned value. Statements are numbered in pre-order.
/// Throws LangError.
Program parse_program(std::string_view source, unsigned width);

/// Parses a single expression over the given variables.
Expr parse_expression(std::string_view text, const std::map<std::string, Sort>& vars, unsigned width);

}  // namespace pbr
