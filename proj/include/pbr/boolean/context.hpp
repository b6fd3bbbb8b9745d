#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pbr/boolean/aig.hpp"
#include "pbr/boolean/bdd.hpp"
#include "pbr/transform/formula.hpp"

namespace pbr {

/// Per-run owner of a BDD arena and of the variable order.
///
/// Each variable gets a slot in registration order. Bits are interleaved: bit
/// `i` of slot `s` sits at level `i * kMaxSlots + s`, so all bit-0s come first.
/// Variables declared as outputs live in a second block of levels placed after
/// every input level, which keeps the outputs at the bottom of the order.
class SymbolicContext {
 public:
  static constexpr Level kMaxSlots = Level{1} << 14;
  static constexpr Level kOutputBase = Level{1} << 30;

  explicit SymbolicContext(unsigned width, std::size_t node_limit = kDefaultNodeLimit);

  unsigned width() const { return width_; }
  BddManager& manager() { return bdd_; }
  const BddManager& manager() const { return bdd_; }

  /// Registers an input variable; later registrations sit deeper in the order.
  void declare(const std::string& var, Sort sort);
  /// Registers a variable whose bits go below all inputs.
  void declare_output(const std::string& var, Sort sort);

  bool is_output(const std::string& var) const;
  unsigned bit_count(const std::string& var) const;
  /// Level of one bit, registering `var` as a Word input if it is unknown.
  Level level(const std::string& var, unsigned bit);
  /// Levels of all bits of a registered variable, LSB first.
  std::vector<Level> levels(const std::string& var) const;
  /// Variable and bit at a level.
  std::pair<std::string, unsigned> at(Level level) const;
  std::string level_name(Level level) const;

  Bdd var_bit(const std::string& var, unsigned bit) { return bdd_.var(level(var, bit)); }

  Bdd to_bdd(const Aig& aig, Lit root);
  Bdd to_bdd(const Aig& aig) { return to_bdd(aig, aig.output()); }
  /// Bit-blasts and converts; free variables are declared with their sorts.
  Bdd to_bdd(const Formula& f);

  bool is_valid(const Formula& f) { return bdd_.is_valid(to_bdd(f)); }
  bool is_sat(const Formula& f) { return bdd_.is_sat(to_bdd(f)); }
  bool equivalent(const Formula& a, const Formula& b) { return to_bdd(a) == to_bdd(b); }

  /// Word values of the given variables under a (partial) assignment; unset bits are 0.
  std::map<std::string, unsigned long long> decode(const std::vector<std::pair<Level, bool>>& assignment,
                                                   const std::vector<std::string>& vars) const;

 private:
  struct Slot {
    Level index = 0;
    Sort sort = Sort::Word;
    bool output = false;
  };

  const Slot& slot(const std::string& var) const;
  void add(const std::string& var, Sort sort, bool output);

  unsigned width_;
  BddManager bdd_;
  std::map<std::string, Slot> slots_;
  std::vector<std::string> input_names_;
  std::vector<std::string> output_names_;
};

}  // namespace pbr
