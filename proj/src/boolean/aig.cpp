#include "pbr/boolean/aig.hpp"

#include <ostream>

#include "pbr/error.hpp"

namespace pbr {

Aig::Aig() { nodes_.push_back(Node{NodeKind::Const, 0, 0, 0}); }

Lit Aig::input(const std::string& var, unsigned bit) {
  auto key = std::make_pair(var, bit);
  if (auto it = input_index_.find(key); it != input_index_.end()) return make_lit(it->second);
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{NodeKind::Input, 0, 0, static_cast<std::uint32_t>(labels_.size())});
  labels_.push_back({var, bit});
  input_index_.emplace(std::move(key), id);
  return make_lit(id);
}

Lit Aig::make_and(Lit a, Lit b) {
  if (a == kLitFalse || b == kLitFalse || a == lit_not(b)) return kLitFalse;
  if (a == kLitTrue) return b;
  if (b == kLitTrue || a == b) return a;
  if (a > b) std::swap(a, b);
  if (auto it = strash_.find({a, b}); it != strash_.end()) return make_lit(it->second);
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{NodeKind::And, a, b, 0});
  strash_.emplace(std::make_pair(a, b), id);
  return make_lit(id);
}

Lit Aig::make_xor(Lit a, Lit b) {
  return lit_not(make_and(lit_not(make_and(a, lit_not(b))), lit_not(make_and(lit_not(a), b))));
}

Lit Aig::make_mux(Lit sel, Lit then_lit, Lit else_lit) {
  if (then_lit == else_lit) return then_lit;
  return lit_not(make_and(lit_not(make_and(sel, then_lit)), lit_not(make_and(lit_not(sel), else_lit))));
}

Lit Aig::make_exists(std::span<const Lit> bound_inputs, Lit body) {
  if (body == kLitFalse || body == kLitTrue) return body;
  Quantifier q;
  for (Lit l : bound_inputs) {
    if (lit_complemented(l) || nodes_[lit_node(l)].kind != NodeKind::Input)
      throw InternalError("quantified literal is not an input");
    q.bound.push_back(lit_node(l));
  }
  q.body = body;
  q.node = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{NodeKind::Quant, body, 0, static_cast<std::uint32_t>(quantifiers_.size())});
  quantifiers_.push_back(std::move(q));
  return make_lit(quantifiers_.back().node);
}

std::size_t Aig::and_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes_) n += node.kind == NodeKind::And;
  return n;
}

std::size_t Aig::reachable_ands(std::span<const Lit> roots) const {
  std::vector<bool> mark(nodes_.size(), false);
  for (Lit r : roots) mark[lit_node(r)] = true;
  std::size_t n = 0;
  for (std::size_t id = nodes_.size(); id-- > 0;) {
    if (!mark[id]) continue;
    const auto& node = nodes_[id];
    if (node.kind == NodeKind::And) {
      ++n;
      mark[lit_node(node.fanin0)] = true;
      mark[lit_node(node.fanin1)] = true;
    } else if (node.kind == NodeKind::Quant) {
      mark[lit_node(node.fanin0)] = true;
    }
  }
  return n;
}

std::vector<bool> Aig::simulate(const std::function<bool(const InputLabel&)>& input_value) const {
  std::vector<bool> value(nodes_.size(), false);
  std::vector<int> forced(nodes_.size(), -1);
  auto lit_value = [&](Lit l) { return value[lit_node(l)] != lit_complemented(l); };

  // Evaluates nodes [0, upto] under the current forced inputs.
  std::function<void(std::uint32_t)> sweep = [&](std::uint32_t upto) {
    for (std::uint32_t id = 0; id <= upto; ++id) {
      const auto& node = nodes_[id];
      switch (node.kind) {
        case NodeKind::Const: value[id] = false; break;
        case NodeKind::Input:
          value[id] = forced[id] >= 0 ? forced[id] == 1 : input_value(labels_[node.aux]);
          break;
        case NodeKind::And: value[id] = lit_value(node.fanin0) && lit_value(node.fanin1); break;
        case NodeKind::Quant: {
          const auto& q = quantifiers_[node.aux];
          const std::size_t n = q.bound.size();
          std::vector<int> saved;
          for (auto b : q.bound) saved.push_back(forced[b]);
          bool any = false;
          for (std::uint64_t m = 0; m < (std::uint64_t{1} << n) && !any; ++m) {
            for (std::size_t k = 0; k < n; ++k) forced[q.bound[k]] = static_cast<int>((m >> k) & 1U);
            sweep(lit_node(q.body));
            any = lit_value(q.body);
          }
          for (std::size_t k = 0; k < n; ++k) forced[q.bound[k]] = saved[k];
          sweep(id - 1);
          value[id] = any;
          break;
        }
      }
    }
  };
  if (!nodes_.empty()) sweep(static_cast<std::uint32_t>(nodes_.size() - 1));
  std::vector<bool> out;
  for (Lit o : outputs_) out.push_back(lit_value(o));
  return out;
}

void Aig::write_aag(std::ostream& os, const std::vector<std::string>& output_names) const {
  // AIGER wants inputs first, then ANDs; renumber accordingly.
  std::vector<std::uint32_t> var(nodes_.size(), 0);
  std::uint32_t next = 1;
  std::vector<std::uint32_t> pseudo_inputs;
  for (std::uint32_t id = 1; id < nodes_.size(); ++id) {
    if (nodes_[id].kind == NodeKind::Input || nodes_[id].kind == NodeKind::Quant) {
      var[id] = next++;
      pseudo_inputs.push_back(id);
    }
  }
  const std::uint32_t num_inputs = next - 1;
  for (std::uint32_t id = 1; id < nodes_.size(); ++id)
    if (nodes_[id].kind == NodeKind::And) var[id] = next++;
  auto map_lit = [&](Lit l) { return make_lit(var[lit_node(l)], lit_complemented(l)); };

  os << "aag " << (next - 1) << ' ' << num_inputs << " 0 " << outputs_.size() << ' ' << (next - 1 - num_inputs) << '\n';
  for (auto id : pseudo_inputs) os << make_lit(var[id]) << '\n';
  for (Lit o : outputs_) os << map_lit(o) << '\n';
  for (std::uint32_t id = 1; id < nodes_.size(); ++id) {
    const auto& n = nodes_[id];
    if (n.kind == NodeKind::And) os << make_lit(var[id]) << ' ' << map_lit(n.fanin0) << ' ' << map_lit(n.fanin1) << '\n';
  }
  for (std::size_t k = 0; k < pseudo_inputs.size(); ++k) {
    const auto& n = nodes_[pseudo_inputs[k]];
    if (n.kind == NodeKind::Input) {
      os << 'i' << k << ' ' << labels_[n.aux].var << '[' << labels_[n.aux].bit << "]\n";
    } else {
      os << 'i' << k << " exists";
      for (auto b : quantifiers_[n.aux].bound) os << ' ' << labels_[nodes_[b].aux].var << '[' << labels_[nodes_[b].aux].bit << ']';
      os << " . " << map_lit(n.fanin0) << '\n';
    }
  }
  for (std::size_t k = 0; k < outputs_.size(); ++k)
    os << 'o' << k << ' ' << (k < output_names.size() ? output_names[k] : "out" + std::to_string(k)) << '\n';
}

}  // namespace pbr
