#include "pbr/lang/preprocess.hpp"

#include "pbr/error.hpp"

namespace pbr {

std::string fresh_variable(const Program& p, const std::string& stem) {
  for (int k = 0;; ++k) {
    std::string name = stem + std::to_string(k);
    if (!p.declares(name)) return name;
  }
}

PreprocessedProgram preprocess_guards(const Program& input, LineRange region) {
  const int total = count_statements(input.body);
  if (region.first < 1 || region.last < region.first || region.last > total) {
    throw RegionError("region " + std::to_string(region.first) + ".." + std::to_string(region.last) +
                      " is outside statements 1.." + std::to_string(total));
  }

  Program p = input;
  auto loc = locate(p.body, region.first);
  if (!loc) throw RegionError("no statement starts at line " + std::to_string(region.first));
  if (loc->inside_loop) throw RegionError("fault regions inside loop bodies are not supported");

  Block& block = *loc->block;
  std::size_t end = loc->index;
  int covered = region.first - 1;
  while (end < block.size() && block[end].line <= region.last) {
    const Stmt& s = block[end];
    if (s.kind == Stmt::Kind::While) throw RegionError("loop guard at line " + std::to_string(s.line) + " cannot be repaired");
    if (s.kind == Stmt::Kind::If && last_line(s) > s.line && region.last > s.line)
      throw RegionError("region crosses the block boundary of the statement at line " + std::to_string(s.line));
    if (s.kind == Stmt::Kind::Assume || s.kind == Stmt::Kind::Assert)
      throw RegionError("statement at line " + std::to_string(s.line) + " is not an assignment");
    covered = s.line;
    ++end;
  }
  if (covered != region.last) throw RegionError("region crosses a block boundary");

  // Rewrite guards back to front so indices stay valid.
  std::size_t rewritten = 0;
  for (std::size_t i = end; i-- > loc->index;) {
    if (block[i].kind != Stmt::Kind::If) continue;
    const std::string t = fresh_variable(p, "t");
    Expr guard = block[i].expr;
    block[i].expr = Expr::var(t, Sort::Bool);
    block.insert(block.begin() + static_cast<std::ptrdiff_t>(i), Stmt::assign(t, guard));
    p.vars.push_back({t, Sort::Bool});
    ++rewritten;
  }

  // With ifs rewritten, the region is the run of assignments starting here.
  std::size_t stop = loc->index;
  std::size_t assignments = 0;
  const std::size_t region_items = (end - loc->index) + rewritten;
  for (std::size_t seen = 0; seen < region_items; ++seen, ++stop) {
    if (block[stop].kind == Stmt::Kind::Assign) ++assignments;
  }
  if (assignments == 0) throw RegionError("region contains no assignment");

  renumber(p.body);
  refresh_variables(p);

  // Each rewritten if contributes its new assignment; the if itself leaves the region.
  std::vector<std::size_t> members;
  for (std::size_t i = loc->index; i < stop; ++i) {
    if (block[i].kind == Stmt::Kind::Assign) members.push_back(i);
  }
  for (std::size_t k = 1; k < members.size(); ++k) {
    if (members[k] != members[k - 1] + 1) throw RegionError("region is not a run of consecutive assignments");
  }
  LineRange lines{block[members.front()].line, block[members.back()].line};
  FaultRegion out{lines, assigned_in(p, lines)};
  return {std::move(p), std::move(out)};
}

}  // namespace pbr
