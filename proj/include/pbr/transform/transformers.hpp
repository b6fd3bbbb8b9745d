#pragma once

#include <span>

#include "pbr/boolean/context.hpp"
#include "pbr/paths/path.hpp"
#include "pbr/transform/formula.hpp"

namespace pbr {

/// wp(φ, assume c) = c → φ;  wp(φ, v = e) = φ[v/e].
Formula wp(const Formula& phi, const PathStmt& s);

/// sp(φ, assume c) = c ∧ φ;  sp(φ, v = e) = ∃v'. v = e[v/v'] ∧ φ[v/v'].
/// On SSA statements the substituted name is the superseded version `prev`.
Formula sp(const Formula& phi, const PathStmt& s);

Formula wp_seq(const Formula& phi, std::span<const PathStmt> path);
Formula sp_seq(const Formula& phi, std::span<const PathStmt> path);
inline Formula wp_seq(const Formula& phi, const Path& path) { return wp_seq(phi, path.statements); }
inline Formula sp_seq(const Formula& phi, const Path& path) { return sp_seq(phi, path.statements); }

/// φ over program variables, renamed to the versions live when `path` starts.
/// Names that are already SSA versions are kept.
Formula at_entry(const Formula& phi, const Path& path);
/// ψ renamed to the versions live when `path` ends.
Formula at_exit(const Formula& psi, const Path& path);

/// Whether {φ} π {ψ} holds, i.e. sp_seq(φ, π) → ψ is valid at the context's
/// width. Decided as φ → wp_seq(ψ, π), which is equivalent.
bool holds(SymbolicContext& ctx, const Formula& phi, const Path& path, const Formula& psi);
bool holds(const Formula& phi, const Path& path, const Formula& psi, unsigned width);

}  // namespace pbr
