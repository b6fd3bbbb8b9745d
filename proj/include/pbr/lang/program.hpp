#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbr/lang/expr.hpp"

namespace pbr {

struct Stmt {
  enum class Kind : std::uint8_t { Assign, Assume, Assert, If, While };

  Kind kind = Kind::Assign;
  /// Statement number: 1-based position in a pre-order walk of the body.
  int line = 0;
  /// Assigned variable (Assign only).
  std::string var;
  /// Right-hand side or condition.
  Expr expr;
  std::vector<Stmt> then_body;  ///< If / While body
  std::vector<Stmt> else_body;  ///< If only

  static Stmt assign(std::string var, Expr rhs);
  static Stmt assume(Expr cond);
  static Stmt assertion(Expr cond);
  static Stmt if_else(Expr cond, std::vector<Stmt> then_body, std::vector<Stmt> else_body = {});
  static Stmt loop(Expr cond, std::vector<Stmt> body);

  friend bool operator==(const Stmt&, const Stmt&) = default;
};

using Block = std::vector<Stmt>;

struct Program {
  std::string name;
  std::vector<VarDecl> params;
  /// Parameters first, then locals in order of first textual assignment.
  std::vector<VarDecl> vars;
  Expr pre;
  Expr post;
  Block body;

  std::optional<Sort> sort_of(const std::string& var) const;
  bool declares(const std::string& var) const { return sort_of(var).has_value(); }

  friend bool operator==(const Program&, const Program&) = default;
};

/// Inclusive statement-number range as given on the command line.
struct LineRange {
  int first = 0;
  int last = 0;

  friend bool operator==(const LineRange&, const LineRange&) = default;
};

/// A repair site: consecutive assignments at one nesting level. `outputs` are
/// the variables the region must produce (v̄); anything else assigned inside
/// the region is a region-local temporary.
struct FaultRegion {
  LineRange lines;
  std::vector<VarDecl> outputs;

  bool contains(int line) const { return line >= lines.first && line <= lines.last; }

  friend bool operator==(const FaultRegion&, const FaultRegion&) = default;
};

/// Reassigns statement numbers in pre-order starting at 1. Returns the count.
int renumber(Block& body);

/// Total number of statements (pre-order count).
int count_statements(const Block& body);

/// Recomputes `vars` from params and body. Throws LangError on sort clashes.
void refresh_variables(Program& p);

/// Locates the block holding statement `line` and its index there.
struct StmtLocation {
  Block* block = nullptr;
  std::size_t index = 0;
  /// True when some enclosing statement is a While.
  bool inside_loop = false;
};
std::optional<StmtLocation> locate(Block& body, int line);

/// Last statement number covered by `s`, including nested statements.
int last_line(const Stmt& s);

/// Variables assigned by the statements of `region` in `p`, in order, without duplicates.
std::vector<VarDecl> assigned_in(const Program& p, const LineRange& region);

/// Variables whose entry values may be observed: parameters, everything read by
/// the precondition, and locals that some execution reads before assigning.
std::vector<VarDecl> input_variables(const Program& p);

}  // namespace pbr
