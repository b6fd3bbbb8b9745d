#pragma once

#include <map>
#include <memory>
#include <string>

#include "pbr/lang/expr.hpp"

namespace pbr {

/// Word-level first-order formula: bool-sorted expression atoms, connectives and
/// existential binders. Immutable and structurally shared like Expr.
class Formula {
 public:
  enum class Kind : std::uint8_t { True, False, Atom, Not, And, Or, Implies, Iff, Exists };

  Formula() = default;

  static Formula truth(bool value);
  /// Throws LangError(Sort) unless `e` is bool-sorted.
  static Formula atom(Expr e);
  static Formula negate(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula exists(std::string var, Sort sort, Formula body);

  explicit operator bool() const { return node_ != nullptr; }

  Kind kind() const;
  const Expr& expr() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& body() const;
  const std::string& bound() const;
  Sort bound_sort() const;
  const void* id() const { return node_.get(); }

  bool is_true() const;
  bool is_false() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind = Kind::True;
  Expr atom;
  Formula lhs;
  Formula rhs;
  std::string bound;
  Sort bound_sort = Sort::Word;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline const Expr& Formula::expr() const { return node_->atom; }
inline const Formula& Formula::lhs() const { return node_->lhs; }
inline const Formula& Formula::rhs() const { return node_->rhs; }
inline const Formula& Formula::body() const { return node_->lhs; }
inline const std::string& Formula::bound() const { return node_->bound; }
inline Sort Formula::bound_sort() const { return node_->bound_sort; }
inline bool Formula::is_true() const { return node_ && node_->kind == Kind::True; }
inline bool Formula::is_false() const { return node_ && node_->kind == Kind::False; }

/// Capture-avoiding substitution of free variables (φ[x/e]).
Formula substitute(const Formula& f, const std::map<std::string, Expr>& replacement);

/// Renames free variables, keeping sorts.
Formula rename(const Formula& f, const std::map<std::string, std::string>& names);

/// FV(φ) with sorts.
std::map<std::string, Sort> free_vars(const Formula& f);

/// Number of Exists binders (counting shared subformulas once).
std::size_t count_quantifiers(const Formula& f);

/// Prefix of names produced by fresh_name; never a program identifier.
inline constexpr char kFreshPrefix = '$';

/// `$k` with k one larger than any `$`-name occurring in `f` or `e`.
std::string fresh_name(const Formula& f, const Expr& e = {});

/// Source-like rendering: `&&`, `||`, `!`, `->`, `<->`, `exists v. ...`.
std::string to_string(const Formula& f);

}  // namespace pbr
