#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace pbr {

/// Words are unsigned bit-vectors of the program width; Bool is a separate sort.
enum class Sort : std::uint8_t { Word, Bool };

enum class UnaryOp : std::uint8_t { LogicalNot, BitNot, Negate };

enum class BinaryOp : std::uint8_t {
  Add, Sub, BitAnd, BitOr, BitXor, Shl, Shr,
  Lt, Le, Eq, Ne, Gt, Ge,
  LogicalAnd, LogicalOr,
};

std::string_view to_string(Sort sort);
std::string_view to_string(UnaryOp op);
std::string_view to_string(BinaryOp op);

bool is_comparison(BinaryOp op);

struct VarDecl {
  std::string name;
  Sort sort = Sort::Word;

  friend bool operator==(const VarDecl&, const VarDecl&) = default;
};

/// Immutable, shared expression tree. Copies are cheap and share structure.
class Expr {
 public:
  enum class Kind : std::uint8_t { Const, Var, Unary, Binary };

  Expr() = default;

  static Expr word(std::uint64_t value);
  static Expr boolean(bool value);
  static Expr var(std::string name, Sort sort);
  /// Throws LangError(Sort) when operand sorts do not fit the operator.
  static Expr unary(UnaryOp op, Expr operand);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);

  explicit operator bool() const { return node_ != nullptr; }

  Kind kind() const;
  Sort sort() const;
  std::uint64_t value() const;
  const std::string& name() const;
  UnaryOp unary_op() const;
  BinaryOp binary_op() const;
  const Expr& operand() const;
  const Expr& lhs() const;
  const Expr& rhs() const;

  /// Identity of the shared node; stable for the lifetime of any copy.
  const void* id() const { return node_.get(); }

  bool is_const() const;
  bool is_var() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Kind kind = Kind::Const;
  Sort sort = Sort::Word;
  std::uint64_t value = 0;
  std::string name;
  UnaryOp uop = UnaryOp::LogicalNot;
  BinaryOp bop = BinaryOp::Add;
  Expr lhs;
  Expr rhs;
};

inline Expr::Kind Expr::kind() const { return node_->kind; }
inline Sort Expr::sort() const { return node_->sort; }
inline std::uint64_t Expr::value() const { return node_->value; }
inline const std::string& Expr::name() const { return node_->name; }
inline UnaryOp Expr::unary_op() const { return node_->uop; }
inline BinaryOp Expr::binary_op() const { return node_->bop; }
inline const Expr& Expr::operand() const { return node_->lhs; }
inline const Expr& Expr::lhs() const { return node_->lhs; }
inline const Expr& Expr::rhs() const { return node_->rhs; }
inline bool Expr::is_const() const { return node_ && node_->kind == Kind::Const; }
inline bool Expr::is_var() const { return node_ && node_->kind == Kind::Var; }

/// Replaces free variables by expressions. Shared subtrees are rewritten once,
/// and untouched subtrees are returned as-is.
Expr substitute(const Expr& e, const std::map<std::string, Expr>& replacement);

/// Renames variables, keeping each occurrence's sort.
Expr rename(const Expr& e, const std::map<std::string, std::string>& names);

std::map<std::string, Sort> free_vars(const Expr& e);
void collect_vars(const Expr& e, std::map<std::string, Sort>& out);

/// Number of distinct nodes in the expression DAG.
std::size_t dag_size(const Expr& e);

}  // namespace pbr
