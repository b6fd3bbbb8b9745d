#include "pbr/boolean/bitblast.hpp"

#include "pbr/error.hpp"

namespace pbr {

BitBlaster::BitBlaster(Aig& aig, unsigned width) : aig_(aig), width_(width) {
  if (width == 0 || width > 64) throw Error("unsupported bit width " + std::to_string(width));
}

std::vector<Lit> BitBlaster::add(const std::vector<Lit>& a, const std::vector<Lit>& b, Lit carry) {
  std::vector<Lit> sum(width_);
  for (unsigned i = 0; i < width_; ++i) {
    const Lit half = aig_.make_xor(a[i], b[i]);
    sum[i] = aig_.make_xor(half, carry);
    carry = aig_.make_or(aig_.make_and(a[i], b[i]), aig_.make_and(half, carry));
  }
  return sum;
}

std::vector<Lit> BitBlaster::shift(const std::vector<Lit>& a, const std::vector<Lit>& amount, bool left) {
  std::vector<Lit> cur = a;
  Lit overflow = kLitFalse;
  for (unsigned k = 0; k < width_; ++k) {
    const std::uint64_t step = std::uint64_t{1} << std::min(k, 63U);
    if (k >= 63 || step >= width_) {
      overflow = aig_.make_or(overflow, amount[k]);
      continue;
    }
    std::vector<Lit> next(width_);
    for (unsigned i = 0; i < width_; ++i) {
      Lit moved = kLitFalse;
      if (left && i >= step) moved = cur[i - step];
      if (!left && i + step < width_) moved = cur[i + step];
      next[i] = aig_.make_mux(amount[k], moved, cur[i]);
    }
    cur = std::move(next);
  }
  for (auto& l : cur) l = aig_.make_and(l, lit_not(overflow));
  return cur;
}

Lit BitBlaster::less_than(const std::vector<Lit>& a, const std::vector<Lit>& b) {
  Lit lt = kLitFalse;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Lit same = lit_not(aig_.make_xor(a[i], b[i]));
    lt = aig_.make_or(aig_.make_and(lit_not(a[i]), b[i]), aig_.make_and(same, lt));
  }
  return lt;
}

Lit BitBlaster::equal(const std::vector<Lit>& a, const std::vector<Lit>& b) {
  Lit eq = kLitTrue;
  for (std::size_t i = 0; i < a.size(); ++i) eq = aig_.make_and(eq, lit_not(aig_.make_xor(a[i], b[i])));
  return eq;
}

const std::vector<Lit>& BitBlaster::bits(const Expr& e) {
  if (auto it = expr_memo_.find(e.id()); it != expr_memo_.end()) return it->second;
  auto value = compute(e);
  expr_keep_.push_back(e);
  return expr_memo_.emplace(e.id(), std::move(value)).first->second;
}

std::vector<Lit> BitBlaster::compute(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Const: {
      if (e.sort() == Sort::Bool) return {e.value() != 0 ? kLitTrue : kLitFalse};
      std::vector<Lit> out(width_);
      for (unsigned i = 0; i < width_; ++i) out[i] = ((e.value() >> i) & 1U) != 0 ? kLitTrue : kLitFalse;
      return out;
    }
    case Expr::Kind::Var: {
      const unsigned n = e.sort() == Sort::Bool ? 1 : width_;
      std::vector<Lit> out(n);
      for (unsigned i = 0; i < n; ++i) out[i] = aig_.input(e.name(), i);
      return out;
    }
    case Expr::Kind::Unary: {
      const auto a = bits(e.operand());
      switch (e.unary_op()) {
        case UnaryOp::LogicalNot: return {lit_not(a[0])};
        case UnaryOp::BitNot: {
          std::vector<Lit> out(width_);
          for (unsigned i = 0; i < width_; ++i) out[i] = lit_not(a[i]);
          return out;
        }
        case UnaryOp::Negate: {
          std::vector<Lit> inverted(width_), zero(width_, kLitFalse);
          for (unsigned i = 0; i < width_; ++i) inverted[i] = lit_not(a[i]);
          return add(inverted, zero, kLitTrue);
        }
      }
      break;
    }
    case Expr::Kind::Binary: {
      const auto a = bits(e.lhs());
      const auto b = bits(e.rhs());
      auto bitwise = [&](auto op) {
        std::vector<Lit> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
        return out;
      };
      switch (e.binary_op()) {
        case BinaryOp::Add: return add(a, b, kLitFalse);
        case BinaryOp::Sub: {
          std::vector<Lit> inverted(width_);
          for (unsigned i = 0; i < width_; ++i) inverted[i] = lit_not(b[i]);
          return add(a, inverted, kLitTrue);
        }
        case BinaryOp::BitAnd: return bitwise([&](Lit x, Lit y) { return aig_.make_and(x, y); });
        case BinaryOp::BitOr: return bitwise([&](Lit x, Lit y) { return aig_.make_or(x, y); });
        case BinaryOp::BitXor: return bitwise([&](Lit x, Lit y) { return aig_.make_xor(x, y); });
        case BinaryOp::Shl: return shift(a, b, true);
        case BinaryOp::Shr: return shift(a, b, false);
        case BinaryOp::Lt: return {less_than(a, b)};
        case BinaryOp::Gt: return {less_than(b, a)};
        case BinaryOp::Le: return {lit_not(less_than(b, a))};
        case BinaryOp::Ge: return {lit_not(less_than(a, b))};
        case BinaryOp::Eq: return {equal(a, b)};
        case BinaryOp::Ne: return {lit_not(equal(a, b))};
        case BinaryOp::LogicalAnd: return {aig_.make_and(a[0], b[0])};
        case BinaryOp::LogicalOr: return {aig_.make_or(a[0], b[0])};
      }
      break;
    }
  }
  throw InternalError("unhandled expression in bit-blaster");
}

Lit BitBlaster::truth(const Formula& f) {
  if (auto it = formula_memo_.find(f.id()); it != formula_memo_.end()) return it->second;
  Lit r = kLitFalse;
  switch (f.kind()) {
    case Formula::Kind::True: r = kLitTrue; break;
    case Formula::Kind::False: r = kLitFalse; break;
    case Formula::Kind::Atom: r = bits(f.expr())[0]; break;
    case Formula::Kind::Not: r = lit_not(truth(f.lhs())); break;
    case Formula::Kind::And: r = aig_.make_and(truth(f.lhs()), truth(f.rhs())); break;
    case Formula::Kind::Or: r = aig_.make_or(truth(f.lhs()), truth(f.rhs())); break;
    case Formula::Kind::Implies: r = aig_.make_or(lit_not(truth(f.lhs())), truth(f.rhs())); break;
    case Formula::Kind::Iff: r = lit_not(aig_.make_xor(truth(f.lhs()), truth(f.rhs()))); break;
    case Formula::Kind::Exists: {
      const Lit body = truth(f.body());
      const unsigned n = f.bound_sort() == Sort::Bool ? 1 : width_;
      std::vector<Lit> bound(n);
      for (unsigned i = 0; i < n; ++i) bound[i] = aig_.input(f.bound(), i);
      r = aig_.make_exists(bound, body);
      break;
    }
  }
  formula_keep_.push_back(f);
  formula_memo_.emplace(f.id(), r);
  return r;
}

Aig bitblast(const Formula& f, unsigned width) {
  Aig aig;
  BitBlaster blaster(aig, width);
  aig.outputs().push_back(blaster.truth(f));
  return aig;
}

}  // namespace pbr
