#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pbr {

/// Position of a variable in the global order; smaller levels sit closer to the root.
using Level = std::uint32_t;

constexpr Level kTerminalLevel = UINT32_MAX;
constexpr std::size_t kDefaultNodeLimit = 1'000'000;

/// Handle to a node of a BddManager. Equal functions have equal handles.
struct Bdd {
  std::uint32_t id = 0;

  friend auto operator<=>(const Bdd&, const Bdd&) = default;
};

/// Reduced ordered BDDs with plain (uncomplemented) edges over a shared node
/// store. `ite` is the single kernel operation; a unique table keeps nodes
/// canonical and a computed table memoizes ite calls. Nodes are never freed:
/// the manager is an arena owned by one repair run.
class BddManager {
 public:
  explicit BddManager(std::size_t node_limit = kDefaultNodeLimit);

  Bdd zero() const { return Bdd{0}; }
  Bdd one() const { return Bdd{1}; }
  Bdd constant(bool v) const { return v ? one() : zero(); }
  Bdd var(Level level);

  Bdd ite(Bdd f, Bdd g, Bdd h);
  Bdd negate(Bdd f) { return ite(f, zero(), one()); }
  Bdd conj(Bdd f, Bdd g) { return ite(f, g, zero()); }
  Bdd disj(Bdd f, Bdd g) { return ite(f, one(), g); }
  Bdd exclusive(Bdd f, Bdd g) { return ite(f, negate(g), g); }
  Bdd implies(Bdd f, Bdd g) { return ite(f, g, one()); }

  /// Quantification over the given levels (any order, duplicates allowed).
  Bdd exists(Bdd f, std::span<const Level> levels);
  Bdd forall(Bdd f, std::span<const Level> levels);
  Bdd cofactor(Bdd f, Level level, bool value);
  /// f with the variable at `level` replaced by function g.
  Bdd compose(Bdd f, Level level, Bdd g);

  bool is_const(Bdd f) const { return f.id <= 1; }
  bool is_valid(Bdd f) const { return f == one(); }
  bool is_sat(Bdd f) const { return f != zero(); }

  /// Smallest satisfying assignment in the variable order: along the path from
  /// the root, the low branch is taken whenever it is satisfiable. Levels not on
  /// the path are implicitly false. Throws Error on an unsatisfiable BDD.
  std::vector<std::pair<Level, bool>> any_sat(Bdd f) const;

  bool evaluate(Bdd f, const std::function<bool(Level)>& value) const;

  Level level(Bdd f) const { return nodes_[f.id].level; }
  Bdd low(Bdd f) const { return Bdd{nodes_[f.id].low}; }
  Bdd high(Bdd f) const { return Bdd{nodes_[f.id].high}; }

  /// Levels f depends on, ascending.
  std::vector<Level> support(Bdd f) const;
  /// Nodes reachable from f, terminals included.
  std::size_t dag_size(Bdd f) const;
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t node_limit() const { return limit_; }

  void write_dot(std::ostream& os, Bdd f, const std::function<std::string(Level)>& name) const;

 private:
  struct Node {
    Level level;
    std::uint32_t low;
    std::uint32_t high;
  };

  struct TripleHash {
    std::size_t operator()(const std::array<std::uint32_t, 3>& k) const {
      std::uint64_t h = k[0];
      h = h * 0x9e3779b97f4a7c15ULL + k[1];
      h = h * 0x9e3779b97f4a7c15ULL + k[2];
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };

  Bdd make(Level level, Bdd low, Bdd high);
  Level top(Bdd f) const { return nodes_[f.id].level; }
  Bdd restrict_top(Bdd f, Level level, bool value) const;

  std::vector<Node> nodes_;
  std::unordered_map<std::array<std::uint32_t, 3>, std::uint32_t, TripleHash> unique_;
  std::unordered_map<std::array<std::uint32_t, 3>, std::uint32_t, TripleHash> computed_;
  std::size_t limit_;
};

}  // namespace pbr
