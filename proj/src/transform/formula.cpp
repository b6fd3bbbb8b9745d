#include "pbr/transform/formula.hpp"

#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "pbr/error.hpp"
#include "pbr/lang/printer.hpp"

namespace pbr {

Formula Formula::truth(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = value ? Kind::True : Kind::False;
  return Formula(std::move(n));
}

Formula Formula::atom(Expr e) {
  if (e.sort() != Sort::Bool) throw LangError(LangError::Kind::Sort, 0, 0, "formula atom must be bool-sorted");
  if (e.is_const()) return truth(e.value() != 0);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = std::move(e);
  return Formula(std::move(n));
}

Formula Formula::negate(Formula f) {
  if (f.is_true()) return truth(false);
  if (f.is_false()) return truth(true);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->lhs = std::move(f);
  return Formula(std::move(n));
}

namespace {

Formula make(Formula::Kind k, Formula a, Formula b);

}  // namespace

Formula Formula::conj(Formula a, Formula b) {
  if (a.is_false() || b.is_false()) return truth(false);
  if (a.is_true()) return b;
  if (b.is_true()) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::disj(Formula a, Formula b) {
  if (a.is_true() || b.is_true()) return truth(true);
  if (a.is_false()) return b;
  if (b.is_false()) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::implies(Formula a, Formula b) {
  if (a.is_false() || b.is_true()) return truth(true);
  if (a.is_true()) return b;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::iff(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Iff;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::exists(std::string var, Sort sort, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exists;
  n->bound = std::move(var);
  n->bound_sort = sort;
  n->lhs = std::move(body);
  return Formula(std::move(n));
}

namespace {

Formula make(Formula::Kind k, Formula a, Formula b) {
  switch (k) {
    case Formula::Kind::Not: return Formula::negate(std::move(a));
    case Formula::Kind::And: return Formula::conj(std::move(a), std::move(b));
    case Formula::Kind::Or: return Formula::disj(std::move(a), std::move(b));
    case Formula::Kind::Implies: return Formula::implies(std::move(a), std::move(b));
    case Formula::Kind::Iff: return Formula::iff(std::move(a), std::move(b));
    default: throw InternalError("make: not a connective");
  }
}

bool is_binary(Formula::Kind k) {
  return k == Formula::Kind::And || k == Formula::Kind::Or || k == Formula::Kind::Implies || k == Formula::Kind::Iff;
}

int fresh_index(const std::string& name) {
  if (name.size() < 2 || name[0] != kFreshPrefix) return 0;
  int k = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return 0;
    k = k * 10 + (name[i] - '0');
  }
  return k;
}

}  // namespace

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False: return true;
    case Formula::Kind::Atom: return a.expr() == b.expr();
    case Formula::Kind::Not: return a.lhs() == b.lhs();
    case Formula::Kind::Exists:
      return a.bound() == b.bound() && a.bound_sort() == b.bound_sort() && a.body() == b.body();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

std::map<std::string, Sort> free_vars(const Formula& f) {
  std::map<std::string, Sort> out;
  // Memoized per node: the free variable set of a shared subformula is fixed.
  std::unordered_map<const void*, std::map<std::string, Sort>> memo;
  std::function<const std::map<std::string, Sort>&(const Formula&)> walk =
      [&](const Formula& g) -> const std::map<std::string, Sort>& {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    std::map<std::string, Sort> fv;
    switch (g.kind()) {
      case Formula::Kind::True:
      case Formula::Kind::False: break;
      case Formula::Kind::Atom: fv = pbr::free_vars(g.expr()); break;
      case Formula::Kind::Not: fv = walk(g.lhs()); break;
      case Formula::Kind::Exists:
        fv = walk(g.body());
        fv.erase(g.bound());
        break;
      default: {
        fv = walk(g.lhs());
        const auto& r = walk(g.rhs());
        fv.insert(r.begin(), r.end());
      }
    }
    return memo.emplace(g.id(), std::move(fv)).first->second;
  };
  out = walk(f);
  return out;
}

std::size_t count_quantifiers(const Formula& f) {
  std::unordered_set<const void*> seen;
  std::size_t n = 0;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (!seen.insert(g.id()).second) return;
    if (g.kind() == Formula::Kind::Exists) {
      ++n;
      walk(g.body());
    } else if (g.kind() == Formula::Kind::Not) {
      walk(g.lhs());
    } else if (is_binary(g.kind())) {
      walk(g.lhs());
      walk(g.rhs());
    }
  };
  walk(f);
  return n;
}

std::string fresh_name(const Formula& f, const Expr& e) {
  int top = 0;
  std::unordered_set<const void*> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (!seen.insert(g.id()).second) return;
    switch (g.kind()) {
      case Formula::Kind::Atom:
        for (const auto& [name, sort] : pbr::free_vars(g.expr())) top = std::max(top, fresh_index(name));
        break;
      case Formula::Kind::Exists:
        top = std::max(top, fresh_index(g.bound()));
        walk(g.body());
        break;
      case Formula::Kind::Not: walk(g.lhs()); break;
      case Formula::Kind::True:
      case Formula::Kind::False: break;
      default:
        walk(g.lhs());
        walk(g.rhs());
    }
  };
  if (f) walk(f);
  if (e)
    for (const auto& [name, sort] : pbr::free_vars(e)) top = std::max(top, fresh_index(name));
  return std::string(1, kFreshPrefix) + std::to_string(top + 1);
}

namespace {

class FormulaRewriter {
 public:
  explicit FormulaRewriter(std::map<std::string, Expr> replacement) : repl_(std::move(replacement)) {}

  Formula run(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    Formula out = rewrite(f);
    memo_.emplace(f.id(), out);
    return out;
  }

 private:
  Formula rewrite(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::True:
      case Formula::Kind::False: return f;
      case Formula::Kind::Atom: {
        Expr e = substitute(f.expr(), repl_);
        return e.id() == f.expr().id() ? f : Formula::atom(e);
      }
      case Formula::Kind::Not: {
        Formula a = run(f.lhs());
        return a.id() == f.lhs().id() ? f : Formula::negate(a);
      }
      case Formula::Kind::Exists: return rewrite_binder(f);
      default: {
        Formula a = run(f.lhs());
        Formula b = run(f.rhs());
        if (a.id() == f.lhs().id() && b.id() == f.rhs().id()) return f;
        return make(f.kind(), a, b);
      }
    }
  }

  Formula rewrite_binder(const Formula& f) {
    std::map<std::string, Expr> inner = repl_;
    inner.erase(f.bound());
    const auto body_fv = free_vars(f.body());
    // Drop replacements that cannot fire, then check for capture of the bound name.
    for (auto it = inner.begin(); it != inner.end();) {
      it = body_fv.count(it->first) ? std::next(it) : inner.erase(it);
    }
    if (inner.empty()) return f;
    bool captures = false;
    for (const auto& [name, e] : inner) captures = captures || pbr::free_vars(e).count(f.bound());
    std::string bound = f.bound();
    if (captures) {
      bound = fresh_name(f);
      for (bool clash = true; clash;) {
        clash = false;
        for (const auto& [name, e] : inner) clash = clash || pbr::free_vars(e).count(bound);
        if (clash) bound = std::string(1, kFreshPrefix) + std::to_string(fresh_index(bound) + 1);
      }
      inner.emplace(f.bound(), Expr::var(bound, f.bound_sort()));
    }
    FormulaRewriter sub(std::move(inner));
    Formula body = sub.run(f.body());
    return Formula::exists(bound, f.bound_sort(), body);
  }

  std::map<std::string, Expr> repl_;
  std::unordered_map<const void*, Formula> memo_;
};

void print(std::ostream& os, const Formula& f, int context) {
  // Binding strength: <-> 1, -> 2, || 3, && 4, ! 5.
  auto wrap = [&](int p, auto&& body) {
    if (p < context) os << '(';
    body();
    if (p < context) os << ')';
  };
  switch (f.kind()) {
    case Formula::Kind::True: os << "true"; return;
    case Formula::Kind::False: os << "false"; return;
    case Formula::Kind::Atom: {
      const bool simple = f.expr().kind() != Expr::Kind::Binary;
      if (!simple && context > 0) os << '(';
      os << to_source(f.expr());
      if (!simple && context > 0) os << ')';
      return;
    }
    case Formula::Kind::Not:
      os << '!';
      print(os, f.lhs(), 6);
      return;
    case Formula::Kind::And:
      wrap(4, [&] { print(os, f.lhs(), 4); os << " && "; print(os, f.rhs(), 5); });
      return;
    case Formula::Kind::Or:
      wrap(3, [&] { print(os, f.lhs(), 3); os << " || "; print(os, f.rhs(), 4); });
      return;
    case Formula::Kind::Implies:
      wrap(2, [&] { print(os, f.lhs(), 3); os << " -> "; print(os, f.rhs(), 2); });
      return;
    case Formula::Kind::Iff:
      wrap(1, [&] { print(os, f.lhs(), 2); os << " <-> "; print(os, f.rhs(), 2); });
      return;
    case Formula::Kind::Exists:
      wrap(0, [&] { os << "exists " << f.bound() << ". "; print(os, f.body(), 0); });
      return;
  }
}

}  // namespace

Formula substitute(const Formula& f, const std::map<std::string, Expr>& replacement) {
  if (replacement.empty()) return f;
  FormulaRewriter rw(replacement);
  return rw.run(f);
}

Formula rename(const Formula& f, const std::map<std::string, std::string>& names) {
  if (names.empty()) return f;
  const auto fv = free_vars(f);
  std::map<std::string, Expr> repl;
  for (const auto& [from, to] : names) {
    auto it = fv.find(from);
    if (it != fv.end()) repl.emplace(from, Expr::var(to, it->second));
  }
  return substitute(f, repl);
}

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(os, f, 0);
  return os.str();
}

}  // namespace pbr
