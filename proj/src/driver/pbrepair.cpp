#include "pbr/driver/pbrepair.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "pbr/driver/model_check.hpp"
#include "pbr/error.hpp"
#include "pbr/lang/preprocess.hpp"
#include "pbr/lang/printer.hpp"
#include "pbr/repair/lower.hpp"
#include "pbr/transform/transformers.hpp"

namespace pbr {

bool CounterexampleSet::add(Counterexample c) {
  if (contains(c.guard_bits)) return false;
  items_.push_back(std::move(c));
  return true;
}

bool CounterexampleSet::contains(const std::string& guard_bits) const {
  return std::any_of(items_.begin(), items_.end(), [&](const Counterexample& c) { return c.guard_bits == guard_bits; });
}

Counterexample decompose(const Path& path) {
  auto split = split_at_region(path);
  return {std::move(split.prefix), std::move(split.region), std::move(split.suffix), path.guard_bits};
}

std::string output_name(const std::string& var) { return var + "'"; }

namespace {

// Renames the free SSA names of `f` by `names`; anything left over is a bug.
Formula canonical(const Formula& f, const std::map<std::string, std::string>& names, const char* what) {
  std::map<std::string, std::string> renaming;
  for (const auto& [var, sort] : free_vars(f)) {
    auto it = names.find(var);
    if (it == names.end()) throw InternalError(std::string(what) + " mentions " + var + " outside the region interface");
    renaming.emplace(var, it->second);
  }
  return rename(f, renaming);
}

std::string version_at(const std::map<std::string, std::string>& versions, const std::string& var) {
  auto it = versions.find(var);
  return it != versions.end() ? it->second : ssa_name(var, 0);
}

}  // namespace

SynthesisProblem build_phi(const CounterexampleSet& cexs, const Formula& pre, const Formula& post,
                           const std::vector<VarDecl>& inputs, const std::vector<VarDecl>& outputs, unsigned width) {
  SynthesisProblem problem;
  problem.x_vars = inputs;
  for (const auto& v : outputs) problem.y_vars.push_back({output_name(v.name), v.sort});
  problem.width = width;

  Formula phi = Formula::truth(true);
  for (const auto& c : cexs) {
    std::map<std::string, std::string> before;
    for (const auto& v : inputs) before.emplace(version_at(c.prefix.ssa_map, v.name), v.name);
    const Formula a = canonical(sp_seq(at_entry(pre, c.prefix), c.prefix), before, "strongest postcondition");

    std::map<std::string, std::string> after;
    for (const auto& v : inputs) after.emplace(version_at(c.suffix.entry_map, v.name), v.name);
    for (const auto& v : outputs) after[version_at(c.suffix.entry_map, v.name)] = output_name(v.name);
    const Formula b = canonical(wp_seq(at_exit(post, c.suffix), c.suffix), after, "weakest precondition");

    phi = Formula::conj(phi, Formula::implies(a, b));
  }
  problem.phi = phi;
  return problem;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Repaired: return "Repaired";
    case Outcome::Unrealizable: return "Unrealizable";
    case Outcome::RegionNotOnPath: return "RegionNotOnPath";
    case Outcome::BoundExceeded: return "BoundExceeded";
    case Outcome::ResourceLimit: return "ResourceLimit";
  }
  return "?";
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::Repaired: return 0;
    case Outcome::Unrealizable: return 2;
    case Outcome::RegionNotOnPath: return 3;
    case Outcome::BoundExceeded: return 4;
    case Outcome::ResourceLimit: return 5;
  }
  return 1;
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<PathStmt> region_statements(const Program& p, const FaultRegion& region) {
  std::vector<PathStmt> out;
  Block body = p.body;
  for (int line = region.lines.first; line <= region.lines.last; ++line) {
    auto loc = locate(body, line);
    const Stmt& s = (*loc->block)[loc->index];
    out.push_back(PathStmt::assign(s.var, s.expr.sort(), s.expr, s.line));
  }
  return out;
}

// Rebuilds a counterexample's path around the current region statements.
Path respliced(const Counterexample& c, const std::vector<PathStmt>& region) {
  std::vector<PathStmt> raw = strip_ssa(c.prefix.statements);
  raw.insert(raw.end(), region.begin(), region.end());
  const auto tail = strip_ssa(c.suffix.statements);
  raw.insert(raw.end(), tail.begin(), tail.end());
  Path path = to_ssa(raw);
  path.guard_bits = c.guard_bits;
  return path;
}

class RepairRun {
 public:
  RepairRun(const Program& p, LineRange lines, const RepairOptions& o)
      : options_(o), ctx_(o.width, o.node_limit) {
    auto prepared = preprocess_guards(p, lines);
    program_ = std::move(prepared.program);
    region_ = std::move(prepared.region);
    pre_ = precondition(program_);
    post_ = postcondition(program_);
    for (const auto& v : program_.vars) inputs_.push_back(v);
  }

  void loop(RunReport& report) {
    for (;;) {
      auto cex = model_check(ctx_, program_, options_.unroll, region_.lines);
      if (!cex) {
        report.outcome = Outcome::Repaired;
        return;
      }
      if (report.iterations.size() >= options_.max_iters)
        throw InternalError("no repair after " + std::to_string(options_.max_iters) + " iterations");
      const auto start = Clock::now();
      IterationRecord record;
      record.path = cex->guard_bits;
      trace_counterexample(*cex);

      if (!cex->region_span) {
        report.iterations.push_back(record);
        throw RegionNotOnPath("counterexample " + cex->guard_bits + " does not pass through the fault region");
      }
      if (!cexs_.add(decompose(*cex)))
        throw InternalError("counterexample " + cex->guard_bits + " was found again after it was repaired");

      const auto problem = build_phi(cexs_, pre_, post_, inputs_, region_.outputs, options_.width);
      if (options_.trace) *options_.trace << "relation: " << to_string(problem.phi) << '\n';
      RepairNetlist net;
      try {
        SymbolicContext synth_ctx(options_.width, options_.node_limit);
        net = extract(synth_ctx, problem);
      } catch (const Unrealizable&) {
        record.realizable = false;
        record.millis = millis_since(start);
        report.iterations.push_back(record);
        throw;
      }
      record.gates = net.gate_count;

      const auto stmts = netlist_to_stmts(net, region_.outputs, options_.width, names_outside(program_, region_.lines));
      auto repaired = apply_repair(program_, region_, stmts);
      program_ = std::move(repaired.program);
      region_ = std::move(repaired.region);
      if (options_.trace) *options_.trace << "candidate (" << net.gate_count << " gates):\n" << emit(program_) << '\n';
      check_monotone();

      record.millis = millis_since(start);
      report.iterations.push_back(record);
    }
  }

  const Program& program() const { return program_; }
  const FaultRegion& region() const { return region_; }

 private:
  // Every counterexample seen so far must hold with the new region.
  void check_monotone() {
    const auto region = region_statements(program_, region_);
    for (const auto& c : cexs_) {
      if (!holds(ctx_, pre_, respliced(c, region), post_))
        throw InternalError("repaired counterexample " + c.guard_bits + " fails again");
    }
  }

  void trace_counterexample(const Path& path) {
    if (!options_.trace) return;
    *options_.trace << "counterexample " << path.guard_bits << ":\n" << annotate(path, pre_, post_);
  }

  const RepairOptions& options_;
  SymbolicContext ctx_;
  Program program_;
  FaultRegion region_;
  Formula pre_;
  Formula post_;
  std::vector<VarDecl> inputs_;
  CounterexampleSet cexs_;
};

}  // namespace

RunReport pbrepair(const Program& p, LineRange region, const RepairOptions& options) {
  const auto start = Clock::now();
  RunReport report;
  RepairRun run(p, region, options);
  try {
    run.loop(report);
  } catch (const Unrealizable& e) {
    report.outcome = Outcome::Unrealizable;
    report.message = e.what();
    report.witness = e.witness();
  } catch (const RegionNotOnPath& e) {
    report.outcome = Outcome::RegionNotOnPath;
    report.message = e.what();
  } catch (const BoundExceeded& e) {
    report.outcome = Outcome::BoundExceeded;
    report.message = e.what();
  } catch (const ResourceLimit& e) {
    report.outcome = Outcome::ResourceLimit;
    report.message = e.what();
  }
  report.program = run.program();
  report.region = run.region();
  report.total_millis = millis_since(start);
  return report;
}

}  // namespace pbr
