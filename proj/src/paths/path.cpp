#include "pbr/paths/path.hpp"

#include <sstream>

#include "pbr/error.hpp"
#include "pbr/lang/printer.hpp"

namespace pbr {

PathStmt PathStmt::assume(Expr cond, int line) {
  PathStmt s;
  s.kind = Kind::Assume;
  s.expr = std::move(cond);
  s.sort = Sort::Bool;
  s.line = line;
  return s;
}

PathStmt PathStmt::assign(std::string var, Sort sort, Expr rhs, int line) {
  PathStmt s;
  s.kind = Kind::Assign;
  s.expr = std::move(rhs);
  s.target = var;
  s.prev = var;
  s.var = std::move(var);
  s.sort = sort;
  s.line = line;
  return s;
}

std::string ssa_name(const std::string& var, int version) { return var + "#" + std::to_string(version); }

std::string base_name(const std::string& name) {
  const auto hash = name.find('#');
  return hash == std::string::npos ? name : name.substr(0, hash);
}

Path to_ssa(const std::vector<PathStmt>& raw) {
  Path out;
  std::map<std::string, int> version;
  auto current = [&](const std::string& var) {
    auto [it, fresh] = version.emplace(var, 0);
    if (fresh) out.entry_map.emplace(var, ssa_name(var, 0));
    return ssa_name(var, it->second);
  };
  for (const auto& s : raw) {
    std::map<std::string, std::string> names;
    for (const auto& [name, sort] : free_vars(s.expr)) names.emplace(name, current(name));
    PathStmt t = s;
    t.expr = rename(s.expr, names);
    if (s.kind == PathStmt::Kind::Assign) {
      t.prev = current(s.var);
      t.target = ssa_name(s.var, ++version[s.var]);
    }
    out.statements.push_back(std::move(t));
  }
  for (const auto& [var, k] : version) out.ssa_map.emplace(var, ssa_name(var, k));
  return out;
}

std::vector<PathStmt> strip_ssa(const std::vector<PathStmt>& statements) {
  std::vector<PathStmt> out;
  out.reserve(statements.size());
  for (const auto& s : statements) {
    std::map<std::string, std::string> names;
    for (const auto& [name, sort] : free_vars(s.expr)) names.emplace(name, base_name(name));
    PathStmt r = s;
    r.expr = rename(s.expr, names);
    if (r.kind == PathStmt::Kind::Assign) r.target = r.prev = r.var;
    out.push_back(std::move(r));
  }
  return out;
}

RegionSplit split_at_region(const Path& path) {
  if (!path.region_span) {
    throw RegionNotOnPath("path " + (path.guard_bits.empty() ? std::string("(no branches)") : path.guard_bits) +
                          " does not traverse the fault region");
  }
  const auto [begin, end] = *path.region_span;
  RegionSplit out;
  out.prefix.statements.assign(path.statements.begin(), path.statements.begin() + static_cast<std::ptrdiff_t>(begin));
  out.region.assign(path.statements.begin() + static_cast<std::ptrdiff_t>(begin),
                    path.statements.begin() + static_cast<std::ptrdiff_t>(end));
  out.suffix.statements.assign(path.statements.begin() + static_cast<std::ptrdiff_t>(end), path.statements.end());
  for (const auto& s : out.region) {
    if (s.kind != PathStmt::Kind::Assign) throw InternalError("fault region holds a non-assignment path statement");
  }

  std::map<std::string, std::string> at = path.entry_map;
  out.prefix.entry_map = at;
  for (const auto& s : out.prefix.statements)
    if (s.kind == PathStmt::Kind::Assign) at[s.var] = s.target;
  out.prefix.ssa_map = at;
  for (const auto& s : out.region) at[s.var] = s.target;
  out.suffix.entry_map = at;
  out.suffix.ssa_map = path.ssa_map;
  out.prefix.guard_bits = out.suffix.guard_bits = path.guard_bits;
  return out;
}

std::string to_string(const PathStmt& s) {
  if (s.kind == PathStmt::Kind::Assume) return "assume(" + to_source(s.expr) + ");";
  return s.target + " = " + to_source(s.expr) + ";";
}

std::string to_string(const Path& path) {
  std::ostringstream os;
  for (const auto& s : path.statements) os << to_string(s) << '\n';
  return os.str();
}

}  // namespace pbr
