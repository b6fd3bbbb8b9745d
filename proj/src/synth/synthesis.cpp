#include "pbr/synth/synthesis.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

#include "pbr/error.hpp"

namespace pbr {
namespace {

std::vector<Level> all_levels(const SymbolicContext& ctx, const std::vector<VarDecl>& vars) {
  std::vector<Level> out;
  for (const auto& v : vars)
    for (Level l : ctx.levels(v.name)) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> names_of(const std::vector<VarDecl>& vars) {
  std::vector<std::string> out;
  for (const auto& v : vars) out.push_back(v.name);
  return out;
}

}  // namespace

Bdd relation_bdd(SymbolicContext& ctx, const SynthesisProblem& p) {
  for (const auto& v : p.x_vars) ctx.declare(v.name, v.sort);
  for (const auto& v : p.y_vars) ctx.declare_output(v.name, v.sort);
  for (const auto& [var, sort] : free_vars(p.phi)) {
    const bool known = std::any_of(p.x_vars.begin(), p.x_vars.end(), [&](const VarDecl& d) { return d.name == var; }) ||
                       std::any_of(p.y_vars.begin(), p.y_vars.end(), [&](const VarDecl& d) { return d.name == var; });
    if (!known) throw InternalError("relation mentions " + var + ", which is neither an input nor an output");
  }
  return ctx.to_bdd(p.phi);
}

bool is_realizable(SymbolicContext& ctx, const SynthesisProblem& p) {
  auto& m = ctx.manager();
  const Bdd b = relation_bdd(ctx, p);
  const auto y = all_levels(ctx, p.y_vars);
  const auto x = all_levels(ctx, p.x_vars);
  return m.is_valid(m.forall(m.exists(b, y), x));
}

bool is_realizable(const SynthesisProblem& p) {
  SymbolicContext ctx(p.width);
  return is_realizable(ctx, p);
}

RepairNetlist extract(SymbolicContext& ctx, const SynthesisProblem& p) {
  auto& m = ctx.manager();
  const Bdd relation = relation_bdd(ctx, p);
  const auto y = all_levels(ctx, p.y_vars);
  const auto x = all_levels(ctx, p.x_vars);

  const Bdd domain = m.exists(relation, y);
  if (!m.is_valid(m.forall(domain, x))) {
    auto witness = ctx.decode(m.any_sat(m.negate(domain)), names_of(p.x_vars));
    std::string text;
    for (const auto& [var, value] : witness) text += (text.empty() ? "" : ", ") + var + " = " + std::to_string(value);
    throw Unrealizable("no repair exists for " + (text.empty() ? std::string("any input") : text), std::move(witness));
  }

  std::map<Level, Bdd> chosen;
  Bdd current = relation;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const std::span<const Level> later(y.begin() + static_cast<std::ptrdiff_t>(i) + 1, y.end());
    const Bdd r = m.exists(current, later);
    const Bdd f = m.cofactor(r, y[i], true);
    chosen.emplace(y[i], f);
    current = m.compose(current, y[i], f);
  }

  RepairNetlist net;
  net.x_vars = p.x_vars;
  net.y_vars = p.y_vars;
  std::unordered_map<std::uint32_t, Lit> memo{{m.zero().id, kLitFalse}, {m.one().id, kLitTrue}};
  std::function<Lit(Bdd)> lower = [&](Bdd f) -> Lit {
    if (auto it = memo.find(f.id); it != memo.end()) return it->second;
    const auto [var, bit] = ctx.at(m.level(f));
    if (ctx.is_output(var)) throw InternalError("extracted function depends on output " + var);
    const Lit hi = lower(m.high(f));
    const Lit lo = lower(m.low(f));
    const Lit r = net.aig.make_mux(net.aig.input(var, bit), hi, lo);
    memo.emplace(f.id, r);
    return r;
  };
  for (const auto& v : p.y_vars) {
    std::vector<Lit> bits;
    for (Level l : ctx.levels(v.name)) bits.push_back(lower(chosen.at(l)));
    for (Lit l : bits) net.aig.outputs().push_back(l);
    net.outputs.push_back(std::move(bits));
  }
  net.gate_count = count_gates(net);

  // Re-derive each output from the netlist itself and substitute it into Φ.
  Bdd check = relation;
  for (const auto& v : p.y_vars) {
    const auto levels = ctx.levels(v.name);
    const auto& bits = net.outputs[&v - p.y_vars.data()];
    for (std::size_t i = 0; i < levels.size(); ++i) check = m.compose(check, levels[i], ctx.to_bdd(net.aig, bits[i]));
  }
  if (!m.is_valid(check)) throw InternalError("synthesized functions do not satisfy the relation");
  return net;
}

RepairNetlist extract(const SynthesisProblem& p) {
  SymbolicContext ctx(p.width);
  return extract(ctx, p);
}

std::size_t count_gates(const RepairNetlist& n) {
  std::vector<Lit> roots;
  for (const auto& bits : n.outputs) roots.insert(roots.end(), bits.begin(), bits.end());
  return n.aig.reachable_ands(roots);
}

std::vector<unsigned long long> evaluate(const RepairNetlist& n, const std::map<std::string, unsigned long long>& x) {
  const auto values = n.aig.simulate([&](const Aig::InputLabel& label) {
    auto it = x.find(label.var);
    return it != x.end() && ((it->second >> label.bit) & 1ULL) != 0;
  });
  std::vector<unsigned long long> out;
  std::size_t k = 0;
  for (const auto& bits : n.outputs) {
    unsigned long long v = 0;
    for (std::size_t i = 0; i < bits.size(); ++i, ++k)
      if (values[k]) v |= 1ULL << i;
    out.push_back(v);
  }
  return out;
}

void write_aag(std::ostream& os, const RepairNetlist& n) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n.outputs.size(); ++v)
    for (std::size_t i = 0; i < n.outputs[v].size(); ++i) names.push_back(n.y_vars[v].name + "[" + std::to_string(i) + "]");
  n.aig.write_aag(os, names);
}

}  // namespace pbr
