#include "pbr/lang/parser.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <vector>

#include "pbr/error.hpp"

namespace pbr {
namespace {

enum class Tok {
  Ident, Number, LParen, RParen, LBrace, RBrace, Comma, Semi, Colon, Assign,
  Plus, Minus, Amp, Pipe, Caret, Shl, Shr, Lt, Le, EqEq, Ne, Gt, Ge, AndAnd, OrOr, Bang, Tilde,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::uint64_t value = 0;
  int line = 1;
  int col = 1;
};

[[noreturn]] void syntax_error(int line, int col, const std::string& what) {
  throw LangError(LangError::Kind::Syntax, line, col, what);
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(src.substr(i, j - i));
      if (t.text.size() > 19) syntax_error(line, col, "integer literal too long");
      t.value = std::stoull(t.text);
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    auto two = [&](char a, char b) { return c == a && i + 1 < src.size() && src[i + 1] == b; };
    std::size_t len = 1;
    if (two('<', '<')) { t.kind = Tok::Shl; len = 2; }
    else if (two('>', '>')) { t.kind = Tok::Shr; len = 2; }
    else if (two('<', '=')) { t.kind = Tok::Le; len = 2; }
    else if (two('>', '=')) { t.kind = Tok::Ge; len = 2; }
    else if (two('=', '=')) { t.kind = Tok::EqEq; len = 2; }
    else if (two('!', '=')) { t.kind = Tok::Ne; len = 2; }
    else if (two('&', '&')) { t.kind = Tok::AndAnd; len = 2; }
    else if (two('|', '|')) { t.kind = Tok::OrOr; len = 2; }
    else {
      switch (c) {
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '{': t.kind = Tok::LBrace; break;
        case '}': t.kind = Tok::RBrace; break;
        case ',': t.kind = Tok::Comma; break;
        case ';': t.kind = Tok::Semi; break;
        case ':': t.kind = Tok::Colon; break;
        case '=': t.kind = Tok::Assign; break;
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '&': t.kind = Tok::Amp; break;
        case '|': t.kind = Tok::Pipe; break;
        case '^': t.kind = Tok::Caret; break;
        case '<': t.kind = Tok::Lt; break;
        case '>': t.kind = Tok::Gt; break;
        case '!': t.kind = Tok::Bang; break;
        case '~': t.kind = Tok::Tilde; break;
        default: syntax_error(line, col, std::string("unexpected character '") + c + "'");
      }
    }
    t.text = std::string(src.substr(i, len));
    advance(len);
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// Untyped syntax, sort-checked in a second pass once local sorts are known.
struct Syn {
  enum class Kind { Number, True, False, Ident, Unary, Binary } kind = Kind::Number;
  std::uint64_t value = 0;
  std::string name;
  UnaryOp uop = UnaryOp::LogicalNot;
  BinaryOp bop = BinaryOp::Add;
  std::shared_ptr<Syn> lhs;
  std::shared_ptr<Syn> rhs;
  int line = 0;
  int col = 0;
};
using SynPtr = std::shared_ptr<Syn>;

struct SynStmt {
  Stmt::Kind kind = Stmt::Kind::Assign;
  std::string var;
  SynPtr expr;
  std::vector<SynStmt> then_body;
  std::vector<SynStmt> else_body;
  int line = 0;
  int col = 0;
};

struct SynProgram {
  std::string name;
  std::vector<std::string> params;
  SynPtr pre;
  SynPtr post;
  std::vector<SynStmt> body;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {"prog", "pre", "post", "if", "else", "while",
                                          "assume", "assert", "true", "false"};
  return k;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SynProgram program() {
    SynProgram p;
    expect_word("prog");
    p.name = ident("program name");
    expect(Tok::LParen, "'('");
    p.params.push_back(ident("parameter name"));
    while (accept(Tok::Comma)) p.params.push_back(ident("parameter name"));
    expect(Tok::RParen, "')'");
    expect_word("pre");
    expect(Tok::Colon, "':'");
    p.pre = expr();
    while (!is_word("post")) {
      if (peek().kind == Tok::End) fail("expected 'post:' before end of input");
      p.body.push_back(stmt());
    }
    expect_word("post");
    expect(Tok::Colon, "':'");
    p.post = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "' after postcondition");
    return p;
  }

  SynPtr standalone_expr() {
    auto e = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "' after expression");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what) const { syntax_error(peek().line, peek().col, what); }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }

  void expect(Tok k, const std::string& what) {
    if (!accept(k)) fail("expected " + what + ", found '" + (peek().kind == Tok::End ? "end of input" : peek().text) + "'");
  }

  bool is_word(const std::string& w) const { return peek().kind == Tok::Ident && peek().text == w; }

  void expect_word(const std::string& w) {
    if (!is_word(w)) fail("expected '" + w + "'");
    next();
  }

  std::string ident(const std::string& what) {
    if (peek().kind != Tok::Ident || keywords().count(peek().text)) fail("expected " + what);
    return next().text;
  }

  std::vector<SynStmt> block() {
    expect(Tok::LBrace, "'{'");
    std::vector<SynStmt> out;
    while (!accept(Tok::RBrace)) {
      if (peek().kind == Tok::End) fail("unterminated block");
      out.push_back(stmt());
    }
    return out;
  }

  SynStmt stmt() {
    SynStmt s;
    s.line = peek().line;
    s.col = peek().col;
    if (is_word("if")) {
      next();
      s.kind = Stmt::Kind::If;
      expect(Tok::LParen, "'('");
      s.expr = expr();
      expect(Tok::RParen, "')'");
      s.then_body = block();
      if (is_word("else")) {
        next();
        s.else_body = block();
      }
      return s;
    }
    if (is_word("while")) {
      next();
      s.kind = Stmt::Kind::While;
      expect(Tok::LParen, "'('");
      s.expr = expr();
      expect(Tok::RParen, "')'");
      s.then_body = block();
      return s;
    }
    if (is_word("assume") || is_word("assert")) {
      s.kind = peek().text == "assume" ? Stmt::Kind::Assume : Stmt::Kind::Assert;
      next();
      expect(Tok::LParen, "'('");
      s.expr = expr();
      expect(Tok::RParen, "')'");
      expect(Tok::Semi, "';'");
      return s;
    }
    s.kind = Stmt::Kind::Assign;
    s.var = ident("statement");
    expect(Tok::Assign, "'='");
    s.expr = expr();
    expect(Tok::Semi, "';'");
    return s;
  }

  // Precedence climbing, C-style levels from '||' (1) to shifts/additive.
  static int precedence(Tok k) {
    switch (k) {
      case Tok::OrOr: return 1;
      case Tok::AndAnd: return 2;
      case Tok::Pipe: return 3;
      case Tok::Caret: return 4;
      case Tok::Amp: return 5;
      case Tok::EqEq: case Tok::Ne: return 6;
      case Tok::Lt: case Tok::Le: case Tok::Gt: case Tok::Ge: return 7;
      case Tok::Shl: case Tok::Shr: return 8;
      case Tok::Plus: case Tok::Minus: return 9;
      default: return 0;
    }
  }

  static BinaryOp binop(Tok k) {
    switch (k) {
      case Tok::OrOr: return BinaryOp::LogicalOr;
      case Tok::AndAnd: return BinaryOp::LogicalAnd;
      case Tok::Pipe: return BinaryOp::BitOr;
      case Tok::Caret: return BinaryOp::BitXor;
      case Tok::Amp: return BinaryOp::BitAnd;
      case Tok::EqEq: return BinaryOp::Eq;
      case Tok::Ne: return BinaryOp::Ne;
      case Tok::Lt: return BinaryOp::Lt;
      case Tok::Le: return BinaryOp::Le;
      case Tok::Gt: return BinaryOp::Gt;
      case Tok::Ge: return BinaryOp::Ge;
      case Tok::Shl: return BinaryOp::Shl;
      case Tok::Shr: return BinaryOp::Shr;
      case Tok::Plus: return BinaryOp::Add;
      default: return BinaryOp::Sub;
    }
  }

  SynPtr expr(int min_prec = 1) {
    SynPtr lhs = unary();
    for (;;) {
      const int prec = precedence(peek().kind);
      if (prec < min_prec || prec == 0) return lhs;
      const Token op = next();
      SynPtr rhs = expr(prec + 1);
      auto n = std::make_shared<Syn>();
      n->kind = Syn::Kind::Binary;
      n->bop = binop(op.kind);
      n->lhs = lhs;
      n->rhs = rhs;
      n->line = op.line;
      n->col = op.col;
      lhs = n;
    }
  }

  SynPtr unary() {
    const Token& t = peek();
    auto n = std::make_shared<Syn>();
    n->line = t.line;
    n->col = t.col;
    if (t.kind == Tok::Bang || t.kind == Tok::Tilde || t.kind == Tok::Minus) {
      n->kind = Syn::Kind::Unary;
      n->uop = t.kind == Tok::Bang ? UnaryOp::LogicalNot : t.kind == Tok::Tilde ? UnaryOp::BitNot : UnaryOp::Negate;
      next();
      n->lhs = unary();
      return n;
    }
    if (accept(Tok::LParen)) {
      auto e = expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.kind == Tok::Number) {
      n->kind = Syn::Kind::Number;
      n->value = t.value;
      next();
      return n;
    }
    if (t.kind == Tok::Ident && t.text == "true") {
      n->kind = Syn::Kind::True;
      next();
      return n;
    }
    if (t.kind == Tok::Ident && t.text == "false") {
      n->kind = Syn::Kind::False;
      next();
      return n;
    }
    if (t.kind == Tok::Ident && !keywords().count(t.text)) {
      n->kind = Syn::Kind::Ident;
      n->name = t.text;
      next();
      return n;
    }
    fail(t.kind == Tok::End ? "unexpected end of input in expression" : "unexpected '" + t.text + "' in expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

class Checker {
 public:
  Checker(std::map<std::string, Sort> env, unsigned width) : env_(std::move(env)), width_(width) {}

  Expr check(const Syn& s) const {
    switch (s.kind) {
      case Syn::Kind::Number:
        if (width_ < 64 && s.value >= (std::uint64_t{1} << width_)) {
          throw LangError(LangError::Kind::Range, s.line, s.col,
                          "literal " + std::to_string(s.value) + " does not fit in " + std::to_string(width_) + " bits");
        }
        return Expr::word(s.value);
      case Syn::Kind::True: return Expr::boolean(true);
      case Syn::Kind::False: return Expr::boolean(false);
      case Syn::Kind::Ident: {
        auto it = env_.find(s.name);
        if (it == env_.end())
          throw LangError(LangError::Kind::Undeclared, s.line, s.col, "undeclared variable '" + s.name + "'");
        return Expr::var(s.name, it->second);
      }
      case Syn::Kind::Unary: {
        Expr a = check(*s.lhs);
        return located(s, [&] { return Expr::unary(s.uop, a); });
      }
      case Syn::Kind::Binary: {
        Expr a = check(*s.lhs);
        Expr b = check(*s.rhs);
        return located(s, [&] { return Expr::binary(s.bop, a, b); });
      }
    }
    return {};
  }

  Expr check_bool(const Syn& s, const std::string& where) const {
    Expr e = check(s);
    if (e.sort() != Sort::Bool)
      throw LangError(LangError::Kind::Sort, s.line, s.col, where + " must be a bool expression");
    return e;
  }

 private:
  template <typename F>
  static Expr located(const Syn& s, F&& build) {
    try {
      return build();
    } catch (const LangError& e) {
      if (e.line() > 0) throw;
      throw LangError(e.kind(), s.line, s.col, e.what());
    }
  }

  std::map<std::string, Sort> env_;
  unsigned width_;
};

// Result sort of an expression, when it can be decided from the known sorts.
std::optional<Sort> shallow_sort(const Syn& s, const std::map<std::string, Sort>& env) {
  switch (s.kind) {
    case Syn::Kind::Number: return Sort::Word;
    case Syn::Kind::True:
    case Syn::Kind::False: return Sort::Bool;
    case Syn::Kind::Ident: {
      auto it = env.find(s.name);
      if (it == env.end()) return std::nullopt;
      return it->second;
    }
    case Syn::Kind::Unary: return s.uop == UnaryOp::LogicalNot ? Sort::Bool : Sort::Word;
    case Syn::Kind::Binary:
      if (is_comparison(s.bop) || s.bop == BinaryOp::LogicalAnd || s.bop == BinaryOp::LogicalOr) return Sort::Bool;
      return Sort::Word;
  }
  return std::nullopt;
}

void collect_assignments(const std::vector<SynStmt>& body, std::vector<const SynStmt*>& out) {
  for (const auto& s : body) {
    if (s.kind == Stmt::Kind::Assign) out.push_back(&s);
    collect_assignments(s.then_body, out);
    collect_assignments(s.else_body, out);
  }
}

Block check_block(const std::vector<SynStmt>& body, const Checker& checker) {
  Block out;
  for (const auto& s : body) {
    switch (s.kind) {
      case Stmt::Kind::Assign:
        out.push_back(Stmt::assign(s.var, checker.check(*s.expr)));
        break;
      case Stmt::Kind::Assume:
        out.push_back(Stmt::assume(checker.check_bool(*s.expr, "assume condition")));
        break;
      case Stmt::Kind::Assert:
        out.push_back(Stmt::assertion(checker.check_bool(*s.expr, "assert condition")));
        break;
      case Stmt::Kind::If:
        out.push_back(Stmt::if_else(checker.check_bool(*s.expr, "if condition"), check_block(s.then_body, checker),
                                    check_block(s.else_body, checker)));
        break;
      case Stmt::Kind::While:
        out.push_back(Stmt::loop(checker.check_bool(*s.expr, "while condition"), check_block(s.then_body, checker)));
        break;
    }
  }
  return out;
}

void check_width(unsigned width) {
  if (width < 1 || width > kMaxWidth)
    throw Error("width must be between 1 and " + std::to_string(kMaxWidth) + ", got " + std::to_string(width));
}

}  // namespace

Program parse_program(std::string_view source, unsigned width) {
  check_width(width);
  Parser parser(lex(source));
  SynProgram syn = parser.program();

  std::map<std::string, Sort> env;
  Program p;
  p.name = syn.name;
  for (const auto& name : syn.params) {
    if (env.count(name)) throw LangError(LangError::Kind::Syntax, 1, 1, "duplicate parameter '" + name + "'");
    env.emplace(name, Sort::Word);
    p.params.push_back({name, Sort::Word});
  }

  // Local sorts follow from assignments; copies between locals need a fixpoint.
  std::vector<const SynStmt*> assigns;
  collect_assignments(syn.body, assigns);
  for (bool changed = true; changed;) {
    changed = false;
    for (const SynStmt* a : assigns) {
      if (env.count(a->var)) continue;
      if (auto sort = shallow_sort(*a->expr, env)) {
        env.emplace(a->var, *sort);
        changed = true;
      }
    }
  }
  for (const SynStmt* a : assigns) {
    if (!env.count(a->var))
      throw LangError(LangError::Kind::Undeclared, a->line, a->col,
                      "cannot determine the sort of '" + a->var + "'");
  }

  Checker checker(env, width);
  p.pre = checker.check_bool(*syn.pre, "precondition");
  p.body = check_block(syn.body, checker);
  p.post = checker.check_bool(*syn.post, "postcondition");
  renumber(p.body);

  // Assignments must agree with the variable's sort.
  for (std::size_t i = 0; i < assigns.size(); ++i) {
    const auto* a = assigns[i];
    const Sort want = env.at(a->var);
    if (shallow_sort(*a->expr, env) != want)
      throw LangError(LangError::Kind::Sort, a->line, a->col,
                      "assignment to '" + a->var + "' has the wrong sort (expected " + std::string(to_string(want)) + ")");
  }
  refresh_variables(p);
  return p;
}

Expr parse_expression(std::string_view text, const std::map<std::string, Sort>& vars, unsigned width) {
  check_width(width);
  Parser parser(lex(text));
  SynPtr syn = parser.standalone_expr();
  return Checker(vars, width).check(*syn);
}

}  // namespace pbr
