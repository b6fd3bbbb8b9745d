#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbr/lang/program.hpp"

namespace pbr {

/// A side-effect free path statement: `assume(c)` or `target = e`.
///
/// For assignments, `prev` is the name the assignment supersedes. On raw paths
/// target == prev == var; after SSA renaming target is `v#k` and prev `v#(k-1)`.
struct PathStmt {
  enum class Kind : std::uint8_t { Assume, Assign };

  Kind kind = Kind::Assume;
  Expr expr;
  std::string target;
  std::string prev;
  std::string var;
  Sort sort = Sort::Word;
  /// Originating statement number, 0 for synthetic statements.
  int line = 0;

  static PathStmt assume(Expr cond, int line = 0);
  static PathStmt assign(std::string var, Sort sort, Expr rhs, int line = 0);

  friend bool operator==(const PathStmt&, const PathStmt&) = default;
};

/// Half-open index range into Path::statements.
using Span = std::pair<std::size_t, std::size_t>;

struct Path {
  std::vector<PathStmt> statements;
  /// One character per branch decision in program order, '1' = guard true.
  std::string guard_bits;
  std::optional<Span> region_span;
  /// Program variable -> name holding its value when the path starts.
  std::map<std::string, std::string> entry_map;
  /// Program variable -> name holding its value when the path ends.
  std::map<std::string, std::string> ssa_map;
  /// The path was cut at the unroll bound with the loop still running.
  bool bound_exceeded = false;

  bool empty() const { return statements.empty(); }
};

/// SSA name of version `k` of `var`.
std::string ssa_name(const std::string& var, int version);

/// Program variable behind an SSA name (`x#3` -> `x`); other names unchanged.
std::string base_name(const std::string& name);

/// Renames a raw statement list into SSA form. Version 0 is the entry value.
Path to_ssa(const std::vector<PathStmt>& raw);

/// Statements with every SSA name mapped back to its program variable.
std::vector<PathStmt> strip_ssa(const std::vector<PathStmt>& statements);

struct RegionSplit {
  Path prefix;
  std::vector<PathStmt> region;
  Path suffix;
};

/// Splits an SSA path at its fault region. The prefix's ssa_map holds the
/// versions at region entry; the suffix's entry_map the versions at region exit.
/// Throws RegionNotOnPath when the path does not traverse the region.
RegionSplit split_at_region(const Path& path);

/// Renders a path one statement per line, e.g. `x#1 = x#0 + 1;`.
std::string to_string(const Path& path);
std::string to_string(const PathStmt& stmt);

}  // namespace pbr
