#include "pbr/driver/model_check.hpp"

#include <sstream>

#include "pbr/error.hpp"
#include "pbr/paths/enumerate.hpp"
#include "pbr/transform/transformers.hpp"

namespace pbr {

Formula precondition(const Program& p) { return p.pre ? Formula::atom(p.pre) : Formula::truth(true); }
Formula postcondition(const Program& p) { return p.post ? Formula::atom(p.post) : Formula::truth(true); }

std::optional<Path> model_check(SymbolicContext& ctx, const Program& p, unsigned unroll_bound,
                                std::optional<LineRange> region) {
  const Formula pre = precondition(p);
  const Formula post = postcondition(p);
  PathEnumerator paths(p, unroll_bound, region);
  std::optional<std::string> truncated;
  while (auto path = paths.next()) {
    if (path->bound_exceeded) {
      if (!truncated && ctx.is_sat(sp_seq(at_entry(pre, *path), *path))) truncated = path->guard_bits;
      continue;
    }
    if (!holds(ctx, pre, *path, post)) return path;
  }
  if (truncated) throw BoundExceeded("path " + *truncated + " is still feasible at the unroll bound");
  return std::nullopt;
}

std::optional<Path> model_check(const Program& p, unsigned width, unsigned unroll_bound,
                                std::optional<LineRange> region) {
  SymbolicContext ctx(width);
  return model_check(ctx, p, unroll_bound, region);
}

std::string annotate(const Path& path, const Formula& pre, const Formula& post) {
  std::vector<Formula> forward{at_entry(pre, path)};
  for (const auto& s : path.statements) forward.push_back(sp(forward.back(), s));
  std::vector<Formula> backward(path.statements.size() + 1);
  backward.back() = at_exit(post, path);
  for (std::size_t i = path.statements.size(); i-- > 0;) backward[i] = wp(backward[i + 1], path.statements[i]);

  std::ostringstream os;
  for (std::size_t i = 0; i <= path.statements.size(); ++i) {
    os << "  sp: {" << to_string(forward[i]) << "}\n";
    os << "  wp: {" << to_string(backward[i]) << "}\n";
    if (i < path.statements.size()) os << to_string(path.statements[i]) << '\n';
  }
  return os.str();
}

}  // namespace pbr
