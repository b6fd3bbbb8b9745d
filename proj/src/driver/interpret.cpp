#include "pbr/driver/interpret.hpp"

#include "pbr/error.hpp"

namespace pbr {

unsigned long long evaluate(const Expr& e, const ConcreteState& state, unsigned width) {
  const unsigned long long mask = width >= 64 ? ~0ULL : (1ULL << width) - 1;
  switch (e.kind()) {
    case Expr::Kind::Const: return e.value() & mask;
    case Expr::Kind::Var: {
      auto it = state.find(e.name());
      return it == state.end() ? 0 : it->second;
    }
    case Expr::Kind::Unary: {
      const auto a = evaluate(e.operand(), state, width);
      switch (e.unary_op()) {
        case UnaryOp::LogicalNot: return a == 0 ? 1 : 0;
        case UnaryOp::BitNot: return ~a & mask;
        case UnaryOp::Negate: return (0 - a) & mask;
      }
      break;
    }
    case Expr::Kind::Binary: {
      const auto a = evaluate(e.lhs(), state, width);
      const auto b = evaluate(e.rhs(), state, width);
      switch (e.binary_op()) {
        case BinaryOp::Add: return (a + b) & mask;
        case BinaryOp::Sub: return (a - b) & mask;
        case BinaryOp::BitAnd: return a & b;
        case BinaryOp::BitOr: return a | b;
        case BinaryOp::BitXor: return a ^ b;
        case BinaryOp::Shl: return b >= width ? 0 : (a << b) & mask;
        case BinaryOp::Shr: return b >= width ? 0 : a >> b;
        case BinaryOp::Lt: return a < b;
        case BinaryOp::Le: return a <= b;
        case BinaryOp::Eq: return a == b;
        case BinaryOp::Ne: return a != b;
        case BinaryOp::Gt: return a > b;
        case BinaryOp::Ge: return a >= b;
        case BinaryOp::LogicalAnd: return a != 0 && b != 0;
        case BinaryOp::LogicalOr: return a != 0 || b != 0;
      }
      break;
    }
  }
  throw InternalError("unhandled expression in interpreter");
}

namespace {

class Machine {
 public:
  Machine(ConcreteState state, unsigned width, unsigned bound) : state_(std::move(state)), width_(width), bound_(bound) {}

  RunStatus block(const Block& body) {
    for (const auto& s : body) {
      const RunStatus r = stmt(s);
      if (r != RunStatus::Finished) return r;
    }
    return RunStatus::Finished;
  }

  ConcreteState state_;

 private:
  bool test(const Expr& e) const { return evaluate(e, state_, width_) != 0; }

  RunStatus stmt(const Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::Assign: state_[s.var] = evaluate(s.expr, state_, width_); return RunStatus::Finished;
      case Stmt::Kind::Assume: return test(s.expr) ? RunStatus::Finished : RunStatus::Blocked;
      case Stmt::Kind::Assert: return test(s.expr) ? RunStatus::Finished : RunStatus::AssertFailed;
      case Stmt::Kind::If: return block(test(s.expr) ? s.then_body : s.else_body);
      case Stmt::Kind::While:
        for (unsigned i = 0; test(s.expr); ++i) {
          if (i == bound_) return RunStatus::BoundHit;
          const RunStatus r = block(s.then_body);
          if (r != RunStatus::Finished) return r;
        }
        return RunStatus::Finished;
    }
    return RunStatus::Finished;
  }

  unsigned width_;
  unsigned bound_;
};

}  // namespace

RunResult run(const Program& p, const ConcreteState& input, unsigned width, unsigned unroll_bound) {
  Machine m(input, width, unroll_bound);
  const RunStatus status = m.block(p.body);
  return {status, std::move(m.state_)};
}

std::optional<ConcreteState> interpret(const Program& p, const ConcreteState& input, unsigned width,
                                       unsigned unroll_bound) {
  auto r = run(p, input, width, unroll_bound);
  if (r.status != RunStatus::Finished) return std::nullopt;
  return std::move(r.state);
}

std::optional<ConcreteState> find_failing_input(const Program& p, unsigned width, unsigned unroll_bound) {
  const auto inputs = input_variables(p);
  unsigned bits = 0;
  for (const auto& v : inputs) bits += v.sort == Sort::Bool ? 1 : width;
  if (bits > kMaxExhaustiveBits)
    throw Error("exhaustive verification needs " + std::to_string(bits) + " input bits; the limit is " +
                std::to_string(kMaxExhaustiveBits));

  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    ConcreteState input;
    for (const auto& v : p.vars) input[v.name] = 0;
    unsigned shift = 0;
    for (const auto& v : inputs) {
      const unsigned n = v.sort == Sort::Bool ? 1 : width;
      input[v.name] = (code >> shift) & ((1ULL << n) - 1);
      shift += n;
    }
    if (p.pre && evaluate(p.pre, input, width) == 0) continue;
    const auto r = run(p, input, width, unroll_bound);
    if (r.status == RunStatus::Blocked) continue;
    if (r.status != RunStatus::Finished || (p.post && evaluate(p.post, r.state, width) == 0)) return input;
  }
  return std::nullopt;
}

bool verify_exhaustive(const Program& p, unsigned width, unsigned unroll_bound) {
  return !find_failing_input(p, width, unroll_bound).has_value();
}

}  // namespace pbr
