#include "pbr/lang/expr.hpp"

#include <unordered_map>
#include <unordered_set>

#include "pbr/error.hpp"

namespace pbr {

std::string_view to_string(Sort sort) { return sort == Sort::Word ? "word" : "bool"; }

std::string_view to_string(UnaryOp op) {
  switch (op) {
    case UnaryOp::LogicalNot: return "!";
    case UnaryOp::BitNot: return "~";
    case UnaryOp::Negate: return "-";
  }
  return "?";
}

std::string_view to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::BitAnd: return "&";
    case BinaryOp::BitOr: return "|";
    case BinaryOp::BitXor: return "^";
    case BinaryOp::Shl: return "<<";
    case BinaryOp::Shr: return ">>";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::LogicalAnd: return "&&";
    case BinaryOp::LogicalOr: return "||";
  }
  return "?";
}

bool is_comparison(BinaryOp op) {
  switch (op) {
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Eq:
    case BinaryOp::Ne:
    case BinaryOp::Gt:
    case BinaryOp::Ge:
      return true;
    default:
      return false;
  }
}

namespace {

[[noreturn]] void sort_error(const std::string& what) {
  throw LangError(LangError::Kind::Sort, 0, 0, what);
}

}  // namespace

Expr Expr::word(std::uint64_t value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->sort = Sort::Word;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::boolean(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->sort = Sort::Bool;
  n->value = value ? 1 : 0;
  return Expr(std::move(n));
}

Expr Expr::var(std::string name, Sort sort) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->sort = sort;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::unary(UnaryOp op, Expr operand) {
  const Sort want = op == UnaryOp::LogicalNot ? Sort::Bool : Sort::Word;
  if (operand.sort() != want) {
    sort_error("operator '" + std::string(to_string(op)) + "' expects a " +
               std::string(to_string(want)) + " operand");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Unary;
  n->sort = want;
  n->uop = op;
  n->lhs = std::move(operand);
  return Expr(std::move(n));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  Sort result = Sort::Word;
  const std::string name(to_string(op));
  switch (op) {
    case BinaryOp::LogicalAnd:
    case BinaryOp::LogicalOr:
      if (lhs.sort() != Sort::Bool || rhs.sort() != Sort::Bool)
        sort_error("operator '" + name + "' expects bool operands");
      result = Sort::Bool;
      break;
    case BinaryOp::Eq:
    case BinaryOp::Ne:
      if (lhs.sort() != rhs.sort()) sort_error("operator '" + name + "' compares different sorts");
      result = Sort::Bool;
      break;
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge:
      if (lhs.sort() != Sort::Word || rhs.sort() != Sort::Word)
        sort_error("operator '" + name + "' expects word operands");
      result = Sort::Bool;
      break;
    default:
      if (lhs.sort() != Sort::Word || rhs.sort() != Sort::Word)
        sort_error("operator '" + name + "' expects word operands");
      result = Sort::Word;
      break;
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Binary;
  n->sort = result;
  n->bop = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Expr(std::move(n));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.sort != y.sort) return false;
  switch (x.kind) {
    case Expr::Kind::Const: return x.value == y.value;
    case Expr::Kind::Var: return x.name == y.name;
    case Expr::Kind::Unary: return x.uop == y.uop && x.lhs == y.lhs;
    case Expr::Kind::Binary: return x.bop == y.bop && x.lhs == y.lhs && x.rhs == y.rhs;
  }
  return false;
}

namespace {

class Rewriter {
 public:
  explicit Rewriter(std::function<Expr(const Expr&)> leaf) : leaf_(std::move(leaf)) {}

  Expr run(const Expr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    Expr out;
    switch (e.kind()) {
      case Expr::Kind::Const:
        out = e;
        break;
      case Expr::Kind::Var:
        out = leaf_(e);
        break;
      case Expr::Kind::Unary: {
        Expr a = run(e.operand());
        out = a.id() == e.operand().id() ? e : Expr::unary(e.unary_op(), a);
        break;
      }
      case Expr::Kind::Binary: {
        Expr a = run(e.lhs());
        Expr b = run(e.rhs());
        out = (a.id() == e.lhs().id() && b.id() == e.rhs().id()) ? e
                                                                 : Expr::binary(e.binary_op(), a, b);
        break;
      }
    }
    memo_.emplace(e.id(), out);
    return out;
  }

 private:
  std::function<Expr(const Expr&)> leaf_;
  std::unordered_map<const void*, Expr> memo_;
};

}  // namespace

Expr substitute(const Expr& e, const std::map<std::string, Expr>& replacement) {
  if (replacement.empty()) return e;
  Rewriter rw([&](const Expr& v) {
    auto it = replacement.find(v.name());
    if (it == replacement.end()) return v;
    if (it->second.sort() != v.sort()) sort_error("substitution for '" + v.name() + "' changes its sort");
    return it->second;
  });
  return rw.run(e);
}

Expr rename(const Expr& e, const std::map<std::string, std::string>& names) {
  if (names.empty()) return e;
  Rewriter rw([&](const Expr& v) {
    auto it = names.find(v.name());
    return it == names.end() ? v : Expr::var(it->second, v.sort());
  });
  return rw.run(e);
}

void collect_vars(const Expr& e, std::map<std::string, Sort>& out) {
  std::unordered_set<const void*> seen;
  std::function<void(const Expr&)> walk = [&](const Expr& x) {
    if (!seen.insert(x.id()).second) return;
    switch (x.kind()) {
      case Expr::Kind::Const: break;
      case Expr::Kind::Var: out.emplace(x.name(), x.sort()); break;
      case Expr::Kind::Unary: walk(x.operand()); break;
      case Expr::Kind::Binary:
        walk(x.lhs());
        walk(x.rhs());
        break;
    }
  };
  walk(e);
}

std::map<std::string, Sort> free_vars(const Expr& e) {
  std::map<std::string, Sort> out;
  collect_vars(e, out);
  return out;
}

std::size_t dag_size(const Expr& e) {
  std::unordered_set<const void*> seen;
  std::function<void(const Expr&)> walk = [&](const Expr& x) {
    if (!seen.insert(x.id()).second) return;
    if (x.kind() == Expr::Kind::Unary) walk(x.operand());
    if (x.kind() == Expr::Kind::Binary) {
      walk(x.lhs());
      walk(x.rhs());
    }
  };
  walk(e);
  return seen.size();
}

}  // namespace pbr
