#include "pbr/paths/enumerate.hpp"

#include "pbr/error.hpp"

namespace pbr {
namespace {

// Replays the program along forced decisions, defaulting to false beyond them.
class Walk {
 public:
  Walk(const std::vector<bool>& forced, unsigned bound, const std::optional<LineRange>& region)
      : forced_(forced), bound_(bound), region_(region) {}

  void block(const Block& body) {
    for (const auto& s : body) {
      if (stopped_) return;
      stmt(s);
    }
  }

  std::string bits;
  std::vector<PathStmt> raw;
  bool truncated = false;
  std::optional<Span> span;

 private:
  bool decide() {
    const bool b = pos_ < forced_.size() ? forced_[pos_] : false;
    ++pos_;
    bits.push_back(b ? '1' : '0');
    return b;
  }

  void stmt(const Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::Assign:
        if (region_ && s.line >= region_->first && s.line <= region_->last) {
          if (!span) {
            span = Span{raw.size(), raw.size() + 1};
          } else if (span->second == raw.size()) {
            span->second = raw.size() + 1;
          } else {
            throw RegionError("fault region is traversed more than once on a path");
          }
        }
        raw.push_back(PathStmt::assign(s.var, s.expr.sort(), s.expr, s.line));
        break;
      case Stmt::Kind::Assume:
        raw.push_back(PathStmt::assume(s.expr, s.line));
        break;
      case Stmt::Kind::Assert:
        throw Error("assert statements are not supported inside the program body (line " + std::to_string(s.line) + ")");
      case Stmt::Kind::If: {
        const bool taken = decide();
        raw.push_back(PathStmt::assume(taken ? s.expr : Expr::unary(UnaryOp::LogicalNot, s.expr), s.line));
        block(taken ? s.then_body : s.else_body);
        break;
      }
      case Stmt::Kind::While:
        for (unsigned iteration = 0;; ++iteration) {
          if (!decide()) {
            raw.push_back(PathStmt::assume(Expr::unary(UnaryOp::LogicalNot, s.expr), s.line));
            return;
          }
          raw.push_back(PathStmt::assume(s.expr, s.line));
          if (iteration == bound_) {
            truncated = stopped_ = true;
            return;
          }
          block(s.then_body);
          if (stopped_) return;
        }
    }
  }

  const std::vector<bool>& forced_;
  std::size_t pos_ = 0;
  unsigned bound_;
  const std::optional<LineRange>& region_;
  bool stopped_ = false;
};

}  // namespace

PathEnumerator::PathEnumerator(const Program& program, unsigned unroll_bound, std::optional<LineRange> region)
    : program_(program), bound_(unroll_bound), region_(region) {}

std::optional<Path> PathEnumerator::next() {
  if (done_) return std::nullopt;
  Walk walk(forced_, bound_, region_);
  walk.block(program_.body);

  // Odometer step: flip the last false decision, drop everything after it.
  const auto last_false = walk.bits.find_last_of('0');
  if (last_false == std::string::npos) {
    done_ = true;
  } else {
    forced_.clear();
    for (std::size_t i = 0; i < last_false; ++i) forced_.push_back(walk.bits[i] == '1');
    forced_.push_back(true);
  }

  Path path = to_ssa(walk.raw);
  path.guard_bits = std::move(walk.bits);
  path.region_span = walk.span;
  path.bound_exceeded = walk.truncated;
  return path;
}

std::vector<Path> enumerate_paths(const Program& program, unsigned unroll_bound, std::optional<LineRange> region) {
  PathEnumerator e(program, unroll_bound, region);
  std::vector<Path> out;
  while (auto p = e.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace pbr
