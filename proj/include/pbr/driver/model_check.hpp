#pragma once

#include <optional>

#include "pbr/boolean/context.hpp"
#include "pbr/lang/program.hpp"
#include "pbr/paths/path.hpp"
#include "pbr/transform/formula.hpp"

namespace pbr {

/// φ and ψ of a program as formulas (`true` when absent).
Formula precondition(const Program& p);
Formula postcondition(const Program& p);

/// First path in enumeration order whose Hoare triple {φ} π {ψ} fails. When
/// `region` is given, returned paths carry their region span.
///
/// Throws BoundExceeded when every complete path holds but some path that is
/// still feasible got cut at the unroll bound.
std::optional<Path> model_check(SymbolicContext& ctx, const Program& p, unsigned unroll_bound,
                                std::optional<LineRange> region = std::nullopt);
std::optional<Path> model_check(const Program& p, unsigned width, unsigned unroll_bound,
                                std::optional<LineRange> region = std::nullopt);

/// Listing with each statement between its sp (left) and wp (right) annotations.
std::string annotate(const Path& path, const Formula& pre, const Formula& post);

}  // namespace pbr
