#include "pbr/boolean/context.hpp"

#include <set>

#include "pbr/boolean/bitblast.hpp"
#include "pbr/error.hpp"

namespace pbr {

SymbolicContext::SymbolicContext(unsigned width, std::size_t node_limit) : width_(width), bdd_(node_limit) {
  if (width == 0 || width > 32) throw Error("unsupported bit width " + std::to_string(width));
}

void SymbolicContext::add(const std::string& var, Sort sort, bool output) {
  if (auto it = slots_.find(var); it != slots_.end()) {
    if (it->second.output != output || (output && it->second.sort != sort))
      throw InternalError("variable " + var + " registered twice with different roles");
    // Binder names recur across formulas with either sort; bit 0 is shared.
    if (it->second.sort != sort) it->second.sort = Sort::Word;
    return;
  }
  auto& names = output ? output_names_ : input_names_;
  if (names.size() >= kMaxSlots) throw ResourceLimit("too many symbolic variables");
  slots_.emplace(var, Slot{static_cast<Level>(names.size()), sort, output});
  names.push_back(var);
}

void SymbolicContext::declare(const std::string& var, Sort sort) { add(var, sort, false); }
void SymbolicContext::declare_output(const std::string& var, Sort sort) { add(var, sort, true); }

const SymbolicContext::Slot& SymbolicContext::slot(const std::string& var) const {
  auto it = slots_.find(var);
  if (it == slots_.end()) throw InternalError("unregistered symbolic variable " + var);
  return it->second;
}

bool SymbolicContext::is_output(const std::string& var) const {
  auto it = slots_.find(var);
  return it != slots_.end() && it->second.output;
}

unsigned SymbolicContext::bit_count(const std::string& var) const {
  return slot(var).sort == Sort::Bool ? 1 : width_;
}

Level SymbolicContext::level(const std::string& var, unsigned bit) {
  if (!slots_.contains(var)) declare(var, Sort::Word);
  const Slot& s = slot(var);
  if (bit >= bit_count(var)) throw InternalError("bit " + std::to_string(bit) + " out of range for " + var);
  return (s.output ? kOutputBase : 0) + bit * kMaxSlots + s.index;
}

std::vector<Level> SymbolicContext::levels(const std::string& var) const {
  const Slot& s = slot(var);
  std::vector<Level> out;
  for (unsigned i = 0; i < bit_count(var); ++i) out.push_back((s.output ? kOutputBase : 0) + i * kMaxSlots + s.index);
  return out;
}

std::pair<std::string, unsigned> SymbolicContext::at(Level level) const {
  const bool output = level >= kOutputBase;
  const Level rel = output ? level - kOutputBase : level;
  const auto& names = output ? output_names_ : input_names_;
  const Level index = rel % kMaxSlots;
  if (index >= names.size()) throw InternalError("level " + std::to_string(level) + " has no variable");
  return {names[index], rel / kMaxSlots};
}

std::string SymbolicContext::level_name(Level level) const {
  auto [var, bit] = at(level);
  return var + "[" + std::to_string(bit) + "]";
}

Bdd SymbolicContext::to_bdd(const Aig& aig, Lit root) {
  const auto& nodes = aig.nodes();
  std::vector<bool> needed(nodes.size(), false);
  needed[lit_node(root)] = true;
  for (std::size_t id = nodes.size(); id-- > 0;) {
    if (!needed[id]) continue;
    const auto& n = nodes[id];
    if (n.kind == Aig::NodeKind::And) {
      needed[lit_node(n.fanin0)] = needed[lit_node(n.fanin1)] = true;
    } else if (n.kind == Aig::NodeKind::Quant) {
      needed[lit_node(n.fanin0)] = true;
    }
  }

  std::vector<Bdd> value(nodes.size(), bdd_.zero());
  auto lit = [&](Lit l) { return lit_complemented(l) ? bdd_.negate(value[lit_node(l)]) : value[lit_node(l)]; };
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    if (!needed[id]) continue;
    const auto& n = nodes[id];
    switch (n.kind) {
      case Aig::NodeKind::Const: value[id] = bdd_.zero(); break;
      case Aig::NodeKind::Input: {
        const auto& label = aig.label_of(static_cast<std::uint32_t>(id));
        value[id] = bdd_.var(level(label.var, label.bit));
        break;
      }
      case Aig::NodeKind::And: value[id] = bdd_.conj(lit(n.fanin0), lit(n.fanin1)); break;
      case Aig::NodeKind::Quant: {
        std::vector<Level> bound;
        for (auto input : aig.quantifiers()[n.aux].bound) {
          const auto& label = aig.label_of(input);
          bound.push_back(level(label.var, label.bit));
        }
        value[id] = bdd_.exists(lit(n.fanin0), bound);
        break;
      }
    }
  }
  return lit(root);
}

namespace {

void declare_binders(SymbolicContext& ctx, const Formula& f, std::set<const void*>& seen) {
  if (!seen.insert(f.id()).second) return;
  switch (f.kind()) {
    case Formula::Kind::Exists:
      if (!ctx.is_output(f.bound())) ctx.declare(f.bound(), f.bound_sort());
      declare_binders(ctx, f.body(), seen);
      break;
    case Formula::Kind::Not: declare_binders(ctx, f.lhs(), seen); break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      declare_binders(ctx, f.lhs(), seen);
      declare_binders(ctx, f.rhs(), seen);
      break;
    default: break;
  }
}

}  // namespace

Bdd SymbolicContext::to_bdd(const Formula& f) {
  for (const auto& [var, sort] : free_vars(f))
    if (!slots_.contains(var)) declare(var, sort);
  std::set<const void*> seen;
  declare_binders(*this, f, seen);
  return to_bdd(bitblast(f, width_));
}

std::map<std::string, unsigned long long> SymbolicContext::decode(
    const std::vector<std::pair<Level, bool>>& assignment, const std::vector<std::string>& vars) const {
  std::map<std::string, unsigned long long> out;
  for (const auto& v : vars) out[v] = 0;
  for (const auto& [lvl, value] : assignment) {
    if (!value) continue;
    auto [var, bit] = at(lvl);
    if (auto it = out.find(var); it != out.end()) it->second |= 1ULL << bit;
  }
  return out;
}

}  // namespace pbr
