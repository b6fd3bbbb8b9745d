#include "pbr/lang/program.hpp"

#include <algorithm>
#include <set>

#include "pbr/error.hpp"

namespace pbr {

Stmt Stmt::assign(std::string var, Expr rhs) {
  Stmt s;
  s.kind = Kind::Assign;
  s.var = std::move(var);
  s.expr = std::move(rhs);
  return s;
}

Stmt Stmt::assume(Expr cond) {
  Stmt s;
  s.kind = Kind::Assume;
  s.expr = std::move(cond);
  return s;
}

Stmt Stmt::assertion(Expr cond) {
  Stmt s;
  s.kind = Kind::Assert;
  s.expr = std::move(cond);
  return s;
}

Stmt Stmt::if_else(Expr cond, std::vector<Stmt> then_body, std::vector<Stmt> else_body) {
  Stmt s;
  s.kind = Kind::If;
  s.expr = std::move(cond);
  s.then_body = std::move(then_body);
  s.else_body = std::move(else_body);
  return s;
}

Stmt Stmt::loop(Expr cond, std::vector<Stmt> body) {
  Stmt s;
  s.kind = Kind::While;
  s.expr = std::move(cond);
  s.then_body = std::move(body);
  return s;
}

std::optional<Sort> Program::sort_of(const std::string& var) const {
  for (const auto& v : vars)
    if (v.name == var) return v.sort;
  return std::nullopt;
}

namespace {

int renumber_from(Block& body, int next) {
  for (auto& s : body) {
    s.line = next++;
    next = renumber_from(s.then_body, next);
    next = renumber_from(s.else_body, next);
  }
  return next;
}

void collect_assigned(const Block& body, std::vector<VarDecl>& out) {
  for (const auto& s : body) {
    if (s.kind == Stmt::Kind::Assign) {
      auto it = std::find_if(out.begin(), out.end(), [&](const VarDecl& d) { return d.name == s.var; });
      if (it == out.end()) {
        out.push_back({s.var, s.expr.sort()});
      } else if (it->sort != s.expr.sort()) {
        throw LangError(LangError::Kind::Sort, s.line, 1,
                        "variable '" + s.var + "' assigned values of different sorts");
      }
    }
    collect_assigned(s.then_body, out);
    collect_assigned(s.else_body, out);
  }
}

std::optional<StmtLocation> locate_in(Block& body, int line, bool in_loop) {
  for (std::size_t i = 0; i < body.size(); ++i) {
    auto& s = body[i];
    if (s.line == line) return StmtLocation{&body, i, in_loop};
    if (line > s.line && line <= last_line(s)) {
      const bool loop = in_loop || s.kind == Stmt::Kind::While;
      if (auto r = locate_in(s.then_body, line, loop)) return r;
      if (auto r = locate_in(s.else_body, line, loop)) return r;
    }
  }
  return std::nullopt;
}

// Definite-assignment walk: every read of a variable not yet definitely
// assigned marks it as an input.
void scan_reads(const Expr& e, const std::set<std::string>& assigned, std::set<std::string>& inputs) {
  for (const auto& [name, sort] : free_vars(e))
    if (!assigned.count(name)) inputs.insert(name);
}

std::set<std::string> scan_block(const Block& body, std::set<std::string> assigned,
                                 std::set<std::string>& inputs) {
  for (const auto& s : body) {
    switch (s.kind) {
      case Stmt::Kind::Assign:
        scan_reads(s.expr, assigned, inputs);
        assigned.insert(s.var);
        break;
      case Stmt::Kind::Assume:
      case Stmt::Kind::Assert:
        scan_reads(s.expr, assigned, inputs);
        break;
      case Stmt::Kind::If: {
        scan_reads(s.expr, assigned, inputs);
        auto a = scan_block(s.then_body, assigned, inputs);
        auto b = scan_block(s.else_body, assigned, inputs);
        std::set<std::string> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(both, both.end()));
        assigned = std::move(both);
        break;
      }
      case Stmt::Kind::While:
        scan_reads(s.expr, assigned, inputs);
        scan_block(s.then_body, assigned, inputs);
        break;
    }
  }
  return assigned;
}

void assigned_in_block(const Block& body, const LineRange& r, std::vector<VarDecl>& out) {
  for (const auto& s : body) {
    if (s.kind == Stmt::Kind::Assign && s.line >= r.first && s.line <= r.last) {
      if (std::none_of(out.begin(), out.end(), [&](const VarDecl& d) { return d.name == s.var; }))
        out.push_back({s.var, s.expr.sort()});
    }
    assigned_in_block(s.then_body, r, out);
    assigned_in_block(s.else_body, r, out);
  }
}

}  // namespace

int renumber(Block& body) { return renumber_from(body, 1) - 1; }

int count_statements(const Block& body) {
  int n = 0;
  for (const auto& s : body) n += 1 + count_statements(s.then_body) + count_statements(s.else_body);
  return n;
}

int last_line(const Stmt& s) {
  return s.line + count_statements(s.then_body) + count_statements(s.else_body);
}

void refresh_variables(Program& p) {
  std::vector<VarDecl> vars = p.params;
  std::vector<VarDecl> locals;
  collect_assigned(p.body, locals);
  for (const auto& l : locals) {
    auto it = std::find_if(vars.begin(), vars.end(), [&](const VarDecl& d) { return d.name == l.name; });
    if (it == vars.end()) {
      vars.push_back(l);
    } else if (it->sort != l.sort) {
      throw LangError(LangError::Kind::Sort, 0, 0, "variable '" + l.name + "' assigned a value of the wrong sort");
    }
  }
  p.vars = std::move(vars);
}

std::optional<StmtLocation> locate(Block& body, int line) { return locate_in(body, line, false); }

std::vector<VarDecl> assigned_in(const Program& p, const LineRange& region) {
  std::vector<VarDecl> out;
  assigned_in_block(p.body, region, out);
  return out;
}

std::vector<VarDecl> input_variables(const Program& p) {
  std::set<std::string> inputs;
  for (const auto& v : p.params) inputs.insert(v.name);
  if (p.pre) scan_reads(p.pre, {}, inputs);
  auto at_exit = scan_block(p.body, {}, inputs);
  if (p.post) scan_reads(p.post, at_exit, inputs);
  std::vector<VarDecl> out;
  for (const auto& v : p.vars)
    if (inputs.count(v.name)) out.push_back(v);
  return out;
}

}  // namespace pbr
