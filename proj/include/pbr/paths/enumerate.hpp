#pragma once

#include <optional>
#include <vector>

#include "pbr/lang/program.hpp"
#include "pbr/paths/path.hpp"

namespace pbr {

constexpr unsigned kDefaultUnrollBound = 8;

/// Lazily yields every control-flow path of a program in lexicographic order of
/// guard bits, false before true. Each While is entered at most `unroll_bound`
/// times; a path still inside a loop at the bound is yielded truncated, with
/// `bound_exceeded` set. Paths are in SSA form.
///
/// The program must outlive the enumerator. Throws Error for `assert` statements,
/// which are not supported on paths.
class PathEnumerator {
 public:
  PathEnumerator(const Program& program, unsigned unroll_bound, std::optional<LineRange> region = std::nullopt);

  std::optional<Path> next();

 private:
  const Program& program_;
  unsigned bound_;
  std::optional<LineRange> region_;
  std::vector<bool> forced_;
  bool done_ = false;
};

std::vector<Path> enumerate_paths(const Program& program, unsigned unroll_bound,
                                  std::optional<LineRange> region = std::nullopt);

}  // namespace pbr
