#include "pbr/transform/transformers.hpp"

namespace pbr {

Formula wp(const Formula& phi, const PathStmt& s) {
  if (s.kind == PathStmt::Kind::Assume) return Formula::implies(Formula::atom(s.expr), phi);
  return substitute(phi, {{s.target, s.expr}});
}

Formula sp(const Formula& phi, const PathStmt& s) {
  if (s.kind == PathStmt::Kind::Assume) return Formula::conj(Formula::atom(s.expr), phi);
  const std::string fresh = fresh_name(phi, s.expr);
  const std::map<std::string, Expr> old{{s.prev, Expr::var(fresh, s.sort)}};
  const Expr defined = Expr::binary(BinaryOp::Eq, Expr::var(s.target, s.sort), substitute(s.expr, old));
  return Formula::exists(fresh, s.sort, Formula::conj(Formula::atom(defined), substitute(phi, old)));
}

Formula wp_seq(const Formula& phi, std::span<const PathStmt> path) {
  Formula f = phi;
  for (auto it = path.rbegin(); it != path.rend(); ++it) f = wp(f, *it);
  return f;
}

Formula sp_seq(const Formula& phi, std::span<const PathStmt> path) {
  Formula f = phi;
  for (const auto& s : path) f = sp(f, s);
  return f;
}

namespace {

Formula rename_plain(const Formula& f, const std::map<std::string, std::string>& versions) {
  std::map<std::string, std::string> names;
  for (const auto& [var, sort] : free_vars(f)) {
    if (var.find('#') != std::string::npos || var.starts_with(kFreshPrefix)) continue;
    auto it = versions.find(var);
    names.emplace(var, it != versions.end() ? it->second : ssa_name(var, 0));
  }
  return rename(f, names);
}

}  // namespace

Formula at_entry(const Formula& phi, const Path& path) { return rename_plain(phi, path.entry_map); }

Formula at_exit(const Formula& psi, const Path& path) {
  std::map<std::string, std::string> versions = path.entry_map;
  for (const auto& [var, name] : path.ssa_map) versions[var] = name;
  return rename_plain(psi, versions);
}

// The wp form is decided over the entry versions only, while sp relates every
// version on the path; both give the same answer.
bool holds(SymbolicContext& ctx, const Formula& phi, const Path& path, const Formula& psi) {
  return ctx.is_valid(Formula::implies(at_entry(phi, path), wp_seq(at_exit(psi, path), path)));
}

bool holds(const Formula& phi, const Path& path, const Formula& psi, unsigned width) {
  SymbolicContext ctx(width);
  return holds(ctx, phi, path, psi);
}

}  // namespace pbr
