#include "pbr/lang/printer.hpp"

#include <sstream>

namespace pbr {
namespace {

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::LogicalOr: return 1;
    case BinaryOp::LogicalAnd: return 2;
    case BinaryOp::BitOr: return 3;
    case BinaryOp::BitXor: return 4;
    case BinaryOp::BitAnd: return 5;
    case BinaryOp::Eq:
    case BinaryOp::Ne: return 6;
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge: return 7;
    case BinaryOp::Shl:
    case BinaryOp::Shr: return 8;
    case BinaryOp::Add:
    case BinaryOp::Sub: return 9;
  }
  return 0;
}

bool is_bit_level(BinaryOp op) {
  return op == BinaryOp::BitAnd || op == BinaryOp::BitOr || op == BinaryOp::BitXor || op == BinaryOp::Shl ||
         op == BinaryOp::Shr;
}

// `parent` is the precedence of an enclosing bit-level operator, or 0. Operands
// of those are parenthesized whenever their precedence differs, as C compilers
// ask for.
void print(std::ostream& os, const Expr& e, int context, int parent = 0) {
  switch (e.kind()) {
    case Expr::Kind::Const:
      if (e.sort() == Sort::Bool)
        os << (e.value() ? "true" : "false");
      else
        os << e.value();
      return;
    case Expr::Kind::Var:
      os << e.name();
      return;
    case Expr::Kind::Unary: {
      os << to_string(e.unary_op());
      const bool atomic = e.operand().kind() == Expr::Kind::Const || e.operand().kind() == Expr::Kind::Var;
      if (!atomic) os << '(';
      print(os, e.operand(), 0);
      if (!atomic) os << ')';
      return;
    }
    case Expr::Kind::Binary: {
      const int p = precedence(e.binary_op());
      const bool paren = p < context || (parent != 0 && p != parent);
      const int mine = is_bit_level(e.binary_op()) ? p : 0;
      if (paren) os << '(';
      // Left-associative: the right operand needs strictly higher precedence.
      print(os, e.lhs(), p, mine);
      os << ' ' << to_string(e.binary_op()) << ' ';
      print(os, e.rhs(), p + 1, mine);
      if (paren) os << ')';
      return;
    }
  }
}

void emit_block(std::ostream& os, const Block& body, int depth) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  for (const auto& s : body) {
    switch (s.kind) {
      case Stmt::Kind::Assign:
      case Stmt::Kind::Assume:
      case Stmt::Kind::Assert:
        os << indent << statement_header(s) << ";\n";
        break;
      case Stmt::Kind::If:
        os << indent << statement_header(s) << " {\n";
        emit_block(os, s.then_body, depth + 1);
        if (!s.else_body.empty()) {
          os << indent << "} else {\n";
          emit_block(os, s.else_body, depth + 1);
        }
        os << indent << "}\n";
        break;
      case Stmt::Kind::While:
        os << indent << statement_header(s) << " {\n";
        emit_block(os, s.then_body, depth + 1);
        os << indent << "}\n";
        break;
    }
  }
}

}  // namespace

std::string to_source(const Expr& e) {
  std::ostringstream os;
  print(os, e, 0);
  return os.str();
}

std::string statement_header(const Stmt& s) {
  switch (s.kind) {
    case Stmt::Kind::Assign: return s.var + " = " + to_source(s.expr);
    case Stmt::Kind::Assume: return "assume(" + to_source(s.expr) + ")";
    case Stmt::Kind::Assert: return "assert(" + to_source(s.expr) + ")";
    case Stmt::Kind::If: return "if (" + to_source(s.expr) + ")";
    case Stmt::Kind::While: return "while (" + to_source(s.expr) + ")";
  }
  return {};
}

std::string emit(const Program& p) {
  std::ostringstream os;
  os << "prog " << p.name << '(';
  for (std::size_t i = 0; i < p.params.size(); ++i) os << (i ? ", " : "") << p.params[i].name;
  os << ")\n";
  os << "pre: " << to_source(p.pre) << '\n';
  emit_block(os, p.body, 0);
  os << "post: " << to_source(p.post) << '\n';
  return os.str();
}

}  // namespace pbr
