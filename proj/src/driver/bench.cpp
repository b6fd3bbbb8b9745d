#include "pbr/driver/bench.hpp"

#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "pbr/driver/interpret.hpp"
#include "pbr/error.hpp"
#include "pbr/lang/printer.hpp"

namespace pbr {
namespace {

std::vector<BinaryOp> flips(BinaryOp op) {
  switch (op) {
    case BinaryOp::Lt: return {BinaryOp::Le, BinaryOp::Gt};
    case BinaryOp::Le: return {BinaryOp::Lt, BinaryOp::Ge};
    case BinaryOp::Gt: return {BinaryOp::Ge, BinaryOp::Lt};
    case BinaryOp::Ge: return {BinaryOp::Gt, BinaryOp::Le};
    case BinaryOp::Eq: return {BinaryOp::Ne};
    case BinaryOp::Ne: return {BinaryOp::Eq};
    default: return {};
  }
}

// Every expression obtained by flipping one comparison operator in `e`.
std::vector<Expr> flipped(const Expr& e) {
  std::vector<Expr> out;
  if (e.kind() == Expr::Kind::Unary) {
    for (auto& x : flipped(e.operand())) out.push_back(Expr::unary(e.unary_op(), x));
  } else if (e.kind() == Expr::Kind::Binary) {
    if (is_comparison(e.binary_op()))
      for (BinaryOp op : flips(e.binary_op())) out.push_back(Expr::binary(op, e.lhs(), e.rhs()));
    for (auto& x : flipped(e.lhs())) out.push_back(Expr::binary(e.binary_op(), x, e.rhs()));
    for (auto& x : flipped(e.rhs())) out.push_back(Expr::binary(e.binary_op(), e.lhs(), x));
  }
  return out;
}

void collect(const Block& body, std::vector<const Stmt*>& out) {
  for (const auto& s : body) {
    out.push_back(&s);
    collect(s.then_body, out);
    collect(s.else_body, out);
  }
}

Program with_statement(const Program& p, int line, const Expr& e) {
  Program m = p;
  auto loc = locate(m.body, line);
  (*loc->block)[loc->index].expr = e;
  return m;
}

std::string fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::vector<Mutant> seed_faults(const Program& p, unsigned width, unsigned unroll_bound) {
  std::vector<const Stmt*> stmts;
  collect(p.body, stmts);
  std::vector<Mutant> out;
  for (const Stmt* s : stmts) {
    if (s->kind == Stmt::Kind::Assign) {
      for (const auto& [read, sort] : free_vars(s->expr)) {
        if (sort != Sort::Word) continue;
        for (const auto& v : p.vars) {
          if (v.sort != Sort::Word || v.name == read) continue;
          const Expr e = rename(s->expr, {{read, v.name}});
          Program m = with_statement(p, s->line, e);
          if (verify_exhaustive(m, width, unroll_bound)) continue;
          out.push_back({s->line, "Assignment", s->var + " = " + to_source(e), std::move(m)});
        }
      }
    } else if (s->kind == Stmt::Kind::If) {
      for (const auto& e : flipped(s->expr)) {
        Program m = with_statement(p, s->line, e);
        if (verify_exhaustive(m, width, unroll_bound)) continue;
        out.push_back({s->line, "Condition", to_source(e), std::move(m)});
      }
    }
  }
  return out;
}

std::vector<BenchRow> bench(const Program& p, const RepairOptions& options, unsigned jobs) {
  const auto mutants = seed_faults(p, options.width, options.unroll);
  std::vector<BenchRow> rows(mutants.size());
  std::vector<std::exception_ptr> errors(mutants.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < mutants.size();) {
      try {
        RepairOptions local = options;
        local.trace = nullptr;
        rows[i].mutant = mutants[i];
        rows[i].report = pbrepair(mutants[i].program, {mutants[i].line, mutants[i].line}, local);
        rows[i].verified = verify_exhaustive(rows[i].report.program, options.width, options.unroll);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < std::max(1U, jobs); ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string bench_table(const std::vector<BenchRow>& rows, bool with_time) {
  std::ostringstream os;
  os << "Line | Type | Fault | Iterations | Paths[gates]" << (with_time ? " | Time" : "") << '\n';
  for (const auto& r : rows) {
    os << r.mutant.line << " | " << r.mutant.type << " | " << r.mutant.change << " | " << r.report.iterations.size()
       << " | ";
    bool first = true;
    for (const auto& it : r.report.iterations) {
      os << (first ? "" : " ") << it.path << '[' << (it.realizable ? std::to_string(it.gates) : "-") << ']';
      first = false;
    }
    if (r.report.outcome != Outcome::Repaired) os << " (" << to_string(r.report.outcome) << ')';
    if (with_time) os << " | " << fixed(r.report.total_millis / 1000.0, 2) << "s";
    os << '\n';
  }
  return os.str();
}

}  // namespace pbr
