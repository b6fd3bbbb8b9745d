#pragma once

#include <vector>

#include "pbr/boolean/aig.hpp"
#include "pbr/transform/formula.hpp"

namespace pbr {

/// Bit-level circuits for word expressions. A Word variable `v` becomes inputs
/// (v, 0) .. (v, w-1), LSB first; a Bool variable the single input (v, 0).
/// Binders are kept as quantifier nodes of the AIG.
class BitBlaster {
 public:
  BitBlaster(Aig& aig, unsigned width);

  /// One literal per bit for Word expressions, a single literal for Bool ones.
  const std::vector<Lit>& bits(const Expr& e);
  Lit truth(const Formula& f);

 private:
  std::vector<Lit> add(const std::vector<Lit>& a, const std::vector<Lit>& b, Lit carry);
  std::vector<Lit> shift(const std::vector<Lit>& a, const std::vector<Lit>& amount, bool left);
  Lit less_than(const std::vector<Lit>& a, const std::vector<Lit>& b);
  Lit equal(const std::vector<Lit>& a, const std::vector<Lit>& b);
  std::vector<Lit> compute(const Expr& e);

  Aig& aig_;
  unsigned width_;
  std::unordered_map<const void*, std::vector<Lit>> expr_memo_;
  std::unordered_map<const void*, Lit> formula_memo_;
  // Keeps memoized nodes alive so their addresses stay unique.
  std::vector<Expr> expr_keep_;
  std::vector<Formula> formula_keep_;
};

/// AIG whose single output is the truth value of `f` at the given width.
Aig bitblast(const Formula& f, unsigned width);

}  // namespace pbr
