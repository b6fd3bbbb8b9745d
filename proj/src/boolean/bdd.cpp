#include "pbr/boolean/bdd.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "pbr/error.hpp"

namespace pbr {

BddManager::BddManager(std::size_t node_limit) : limit_(node_limit) {
  nodes_.push_back(Node{kTerminalLevel, 0, 0});  // false
  nodes_.push_back(Node{kTerminalLevel, 1, 1});  // true
  unique_.reserve(1 << 14);
  computed_.reserve(1 << 14);
}

Bdd BddManager::make(Level level, Bdd low, Bdd high) {
  if (low == high) return low;
  const std::array<std::uint32_t, 3> key{level, low.id, high.id};
  if (auto it = unique_.find(key); it != unique_.end()) return Bdd{it->second};
  if (nodes_.size() >= limit_)
    throw ResourceLimit("BDD node limit of " + std::to_string(limit_) + " nodes exceeded");
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{level, low.id, high.id});
  unique_.emplace(key, id);
  return Bdd{id};
}

Bdd BddManager::var(Level level) {
  if (level == kTerminalLevel) throw InternalError("variable level collides with terminals");
  return make(level, zero(), one());
}

Bdd BddManager::restrict_top(Bdd f, Level level, bool value) const {
  if (top(f) != level) return f;
  return value ? high(f) : low(f);
}

Bdd BddManager::ite(Bdd f, Bdd g, Bdd h) {
  if (f == one()) return g;
  if (f == zero()) return h;
  if (g == h) return g;
  if (g == one() && h == zero()) return f;
  if (g == f) g = one();
  if (h == f) h = zero();
  if (g == h) return g;

  const std::array<std::uint32_t, 3> key{f.id, g.id, h.id};
  if (auto it = computed_.find(key); it != computed_.end()) return Bdd{it->second};

  const Level v = std::min({top(f), top(g), top(h)});
  const Bdd hi = ite(restrict_top(f, v, true), restrict_top(g, v, true), restrict_top(h, v, true));
  const Bdd lo = ite(restrict_top(f, v, false), restrict_top(g, v, false), restrict_top(h, v, false));
  const Bdd r = make(v, lo, hi);
  computed_.emplace(key, r.id);
  return r;
}

Bdd BddManager::exists(Bdd f, std::span<const Level> levels) {
  if (levels.empty() || is_const(f)) return f;
  std::vector<Level> sorted(levels.begin(), levels.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const Level deepest = sorted.back();

  std::unordered_map<std::uint32_t, Bdd> memo;
  std::function<Bdd(Bdd)> go = [&](Bdd g) -> Bdd {
    if (is_const(g) || top(g) > deepest) return g;
    if (auto it = memo.find(g.id); it != memo.end()) return it->second;
    const Bdd lo = go(low(g));
    const Bdd hi = go(high(g));
    const Bdd r = std::binary_search(sorted.begin(), sorted.end(), top(g)) ? disj(lo, hi) : make(top(g), lo, hi);
    memo.emplace(g.id, r);
    return r;
  };
  return go(f);
}

Bdd BddManager::forall(Bdd f, std::span<const Level> levels) { return negate(exists(negate(f), levels)); }

Bdd BddManager::cofactor(Bdd f, Level level, bool value) {
  std::unordered_map<std::uint32_t, Bdd> memo;
  std::function<Bdd(Bdd)> go = [&](Bdd g) -> Bdd {
    if (is_const(g) || top(g) > level) return g;
    if (top(g) == level) return value ? high(g) : low(g);
    if (auto it = memo.find(g.id); it != memo.end()) return it->second;
    const Bdd r = make(top(g), go(low(g)), go(high(g)));
    memo.emplace(g.id, r);
    return r;
  };
  return go(f);
}

Bdd BddManager::compose(Bdd f, Level level, Bdd g) {
  return ite(g, cofactor(f, level, true), cofactor(f, level, false));
}

std::vector<std::pair<Level, bool>> BddManager::any_sat(Bdd f) const {
  if (f == zero()) throw Error("any_sat on an unsatisfiable BDD");
  std::vector<std::pair<Level, bool>> out;
  while (!is_const(f)) {
    if (low(f) != zero()) {
      out.emplace_back(top(f), false);
      f = low(f);
    } else {
      out.emplace_back(top(f), true);
      f = high(f);
    }
  }
  return out;
}

bool BddManager::evaluate(Bdd f, const std::function<bool(Level)>& value) const {
  while (!is_const(f)) f = value(top(f)) ? high(f) : low(f);
  return f == one();
}

std::vector<Level> BddManager::support(Bdd f) const {
  std::set<Level> levels;
  std::set<std::uint32_t> seen;
  std::vector<Bdd> stack{f};
  while (!stack.empty()) {
    Bdd g = stack.back();
    stack.pop_back();
    if (is_const(g) || !seen.insert(g.id).second) continue;
    levels.insert(top(g));
    stack.push_back(low(g));
    stack.push_back(high(g));
  }
  return {levels.begin(), levels.end()};
}

std::size_t BddManager::dag_size(Bdd f) const {
  std::set<std::uint32_t> seen;
  std::vector<Bdd> stack{f};
  while (!stack.empty()) {
    Bdd g = stack.back();
    stack.pop_back();
    if (!seen.insert(g.id).second || is_const(g)) continue;
    stack.push_back(low(g));
    stack.push_back(high(g));
  }
  return seen.size();
}

void BddManager::write_dot(std::ostream& os, Bdd f, const std::function<std::string(Level)>& name) const {
  os << "digraph bdd {\n  n0 [shape=box,label=\"0\"];\n  n1 [shape=box,label=\"1\"];\n";
  std::set<std::uint32_t> seen;
  std::vector<Bdd> stack{f};
  while (!stack.empty()) {
    Bdd g = stack.back();
    stack.pop_back();
    if (is_const(g) || !seen.insert(g.id).second) continue;
    os << "  n" << g.id << " [label=\"" << name(top(g)) << "\"];\n";
    os << "  n" << g.id << " -> n" << low(g).id << " [style=dashed];\n";
    os << "  n" << g.id << " -> n" << high(g).id << ";\n";
    stack.push_back(low(g));
    stack.push_back(high(g));
  }
  os << "}\n";
}

}  // namespace pbr
