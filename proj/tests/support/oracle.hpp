#pragma once

// Reference implementations used as test oracles. They share no code with the
// library beyond the data types: expressions are evaluated directly on
// integers and quantifiers by enumeration.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pbr/lang/expr.hpp"
#include "pbr/paths/path.hpp"
#include "pbr/transform/formula.hpp"

namespace oracle {

using Env = std::map<std::string, std::uint64_t>;

inline std::uint64_t mask(unsigned w) { return w >= 64 ? ~0ULL : (1ULL << w) - 1; }

inline std::uint64_t eval(const pbr::Expr& e, const Env& env, unsigned w) {
  using pbr::BinaryOp;
  using pbr::Expr;
  using pbr::UnaryOp;
  switch (e.kind()) {
    case Expr::Kind::Const: return e.value();
    case Expr::Kind::Var: return env.at(e.name());
    case Expr::Kind::Unary: {
      const std::uint64_t a = eval(e.operand(), env, w);
      if (e.unary_op() == UnaryOp::LogicalNot) return a ? 0 : 1;
      if (e.unary_op() == UnaryOp::BitNot) return mask(w) - a;
      return (mask(w) + 1 - a) & mask(w);
    }
    case Expr::Kind::Binary: {
      const std::uint64_t a = eval(e.lhs(), env, w);
      const std::uint64_t b = eval(e.rhs(), env, w);
      switch (e.binary_op()) {
        case BinaryOp::Add: return (a + b) % (mask(w) + 1);
        case BinaryOp::Sub: return (a + (mask(w) + 1) - b) % (mask(w) + 1);
        case BinaryOp::BitAnd: return a & b;
        case BinaryOp::BitOr: return a | b;
        case BinaryOp::BitXor: return a ^ b;
        case BinaryOp::Shl: {
          std::uint64_t r = a;
          for (std::uint64_t i = 0; i < b && r != 0; ++i) r = (r * 2) & mask(w);
          return r;
        }
        case BinaryOp::Shr: {
          std::uint64_t r = a;
          for (std::uint64_t i = 0; i < b && r != 0; ++i) r /= 2;
          return r;
        }
        case BinaryOp::Lt: return a < b;
        case BinaryOp::Le: return a <= b;
        case BinaryOp::Eq: return a == b;
        case BinaryOp::Ne: return a != b;
        case BinaryOp::Gt: return a > b;
        case BinaryOp::Ge: return a >= b;
        case BinaryOp::LogicalAnd: return a && b;
        case BinaryOp::LogicalOr: return a || b;
      }
    }
  }
  return 0;
}

inline std::uint64_t domain(pbr::Sort s, unsigned w) { return s == pbr::Sort::Bool ? 2 : mask(w) + 1; }

inline bool eval(const pbr::Formula& f, Env env, unsigned w) {
  using K = pbr::Formula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Atom: return eval(f.expr(), env, w) != 0;
    case K::Not: return !eval(f.lhs(), env, w);
    case K::And: return eval(f.lhs(), env, w) && eval(f.rhs(), env, w);
    case K::Or: return eval(f.lhs(), env, w) || eval(f.rhs(), env, w);
    case K::Implies: return !eval(f.lhs(), env, w) || eval(f.rhs(), env, w);
    case K::Iff: return eval(f.lhs(), env, w) == eval(f.rhs(), env, w);
    case K::Exists:
      for (std::uint64_t v = 0; v < domain(f.bound_sort(), w); ++v) {
        env[f.bound()] = v;
        if (eval(f.body(), env, w)) return true;
      }
      return false;
  }
  return false;
}

/// Calls `fn` for every valuation of `vars`; stops early when fn returns false.
inline bool for_all(const std::vector<pbr::VarDecl>& vars, unsigned w, const std::function<bool(const Env&)>& fn) {
  Env env;
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == vars.size()) return fn(env);
    for (std::uint64_t v = 0; v < domain(vars[i].sort, w); ++v) {
      env[vars[i].name] = v;
      if (!go(i + 1)) return false;
    }
    return true;
  };
  return go(0);
}

inline std::vector<pbr::VarDecl> decls(const std::map<std::string, pbr::Sort>& vars) {
  std::vector<pbr::VarDecl> out;
  for (const auto& [name, sort] : vars) out.push_back({name, sort});
  return out;
}

inline bool valid(const pbr::Formula& f, unsigned w) {
  return for_all(decls(pbr::free_vars(f)), w, [&](const Env& env) { return eval(f, env, w); });
}

inline bool equivalent(const pbr::Formula& a, const pbr::Formula& b, unsigned w) {
  return valid(pbr::Formula::iff(a, b), w);
}

/// ∀x ∃y. φ by enumeration.
inline bool realizable(const pbr::Formula& phi, const std::vector<pbr::VarDecl>& x, const std::vector<pbr::VarDecl>& y,
                       unsigned w) {
  return for_all(x, w, [&](const Env& xe) {
    return !for_all(y, w, [&](const Env& ye) {
      Env env = xe;
      env.insert(ye.begin(), ye.end());
      return !eval(phi, env, w);
    });
  });
}

/// Random well-sorted expressions and formulas over fixed variables.
class Generator {
 public:
  Generator(std::uint64_t seed, unsigned width, std::vector<std::string> words, std::vector<std::string> bools = {})
      : rng_(seed), width_(width), words_(std::move(words)), bools_(std::move(bools)) {}

  std::mt19937_64& rng() { return rng_; }
  unsigned pick(unsigned n) { return static_cast<unsigned>(std::uniform_int_distribution<unsigned>(0, n - 1)(rng_)); }

  pbr::Expr word(int depth) {
    using pbr::BinaryOp;
    using pbr::Expr;
    if (depth <= 0 || pick(3) == 0) {
      if (words_.empty() || pick(4) == 0) return Expr::word(pick(static_cast<unsigned>(mask(width_)) + 1));
      return Expr::var(words_[pick(static_cast<unsigned>(words_.size()))], pbr::Sort::Word);
    }
    switch (pick(9)) {
      case 0: return Expr::unary(pbr::UnaryOp::BitNot, word(depth - 1));
      case 1: return Expr::unary(pbr::UnaryOp::Negate, word(depth - 1));
      default: {
        static const BinaryOp ops[] = {BinaryOp::Add, BinaryOp::Sub, BinaryOp::BitAnd, BinaryOp::BitOr,
                                       BinaryOp::BitXor, BinaryOp::Shl, BinaryOp::Shr};
        return Expr::binary(ops[pick(7)], word(depth - 1), word(depth - 1));
      }
    }
  }

  pbr::Expr boolean(int depth) {
    using pbr::BinaryOp;
    using pbr::Expr;
    if (!bools_.empty() && pick(5) == 0) return Expr::var(bools_[pick(static_cast<unsigned>(bools_.size()))], pbr::Sort::Bool);
    if (depth <= 0 || pick(3) != 0) {
      static const BinaryOp cmp[] = {BinaryOp::Lt, BinaryOp::Le, BinaryOp::Eq, BinaryOp::Ne, BinaryOp::Gt, BinaryOp::Ge};
      return Expr::binary(cmp[pick(6)], word(depth > 0 ? depth - 1 : 0), word(depth > 0 ? depth - 1 : 0));
    }
    switch (pick(3)) {
      case 0: return Expr::unary(pbr::UnaryOp::LogicalNot, boolean(depth - 1));
      case 1: return Expr::binary(BinaryOp::LogicalAnd, boolean(depth - 1), boolean(depth - 1));
      default: return Expr::binary(BinaryOp::LogicalOr, boolean(depth - 1), boolean(depth - 1));
    }
  }

  pbr::Formula formula(int depth, const std::vector<std::string>& binders = {}) {
    using pbr::Formula;
    if (depth <= 0 || pick(3) == 0) return Formula::atom(boolean(1));
    switch (pick(6)) {
      case 0: return Formula::negate(formula(depth - 1, binders));
      case 1: return Formula::conj(formula(depth - 1, binders), formula(depth - 1, binders));
      case 2: return Formula::disj(formula(depth - 1, binders), formula(depth - 1, binders));
      case 3: return Formula::implies(formula(depth - 1, binders), formula(depth - 1, binders));
      case 4: return Formula::iff(formula(depth - 1, binders), formula(depth - 1, binders));
      default:
        if (binders.empty()) return formula(depth - 1, binders);
        return Formula::exists(binders[pick(static_cast<unsigned>(binders.size()))], pbr::Sort::Word,
                               formula(depth - 1, binders));
    }
  }

  /// Raw path of `length` statements over the word variables.
  std::vector<pbr::PathStmt> path(std::size_t length) {
    std::vector<pbr::PathStmt> out;
    for (std::size_t i = 0; i < length; ++i) {
      if (pick(2) == 0) {
        out.push_back(pbr::PathStmt::assume(boolean(1)));
      } else {
        out.push_back(pbr::PathStmt::assign(words_[pick(static_cast<unsigned>(words_.size()))], pbr::Sort::Word, word(2)));
      }
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
  unsigned width_;
  std::vector<std::string> words_;
  std::vector<std::string> bools_;
};

}  // namespace oracle
