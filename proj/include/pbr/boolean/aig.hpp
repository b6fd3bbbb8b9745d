#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pbr {

/// AIG literal: node index * 2, low bit set for complement.
using Lit = std::uint32_t;

constexpr Lit kLitFalse = 0;
constexpr Lit kLitTrue = 1;

constexpr Lit lit_not(Lit l) { return l ^ 1U; }
constexpr std::uint32_t lit_node(Lit l) { return l >> 1; }
constexpr bool lit_complemented(Lit l) { return (l & 1U) != 0; }
constexpr Lit make_lit(std::uint32_t node, bool complemented = false) { return (node << 1) | (complemented ? 1U : 0U); }

/// And-inverter graph with structural hashing.
///
/// Node 0 is constant false. Inputs are labeled (variable, bit). Besides AND
/// nodes the graph may hold quantifier nodes: `∃ bound. body`, whose value is
/// computed when converting to a BDD. Every node only references smaller ids.
class Aig {
 public:
  enum class NodeKind : std::uint8_t { Const, Input, And, Quant };

  struct Node {
    NodeKind kind = NodeKind::Const;
    Lit fanin0 = 0;  ///< And: first input; Quant: body
    Lit fanin1 = 0;  ///< And: second input
    std::uint32_t aux = 0;  ///< Input: label index; Quant: quantifier index
  };

  struct InputLabel {
    std::string var;
    unsigned bit = 0;

    friend bool operator==(const InputLabel&, const InputLabel&) = default;
  };

  struct Quantifier {
    std::vector<std::uint32_t> bound;  ///< input node ids
    Lit body = 0;
    std::uint32_t node = 0;
  };

  Aig();

  /// Input literal for bit `bit` of `var`, created on first use.
  Lit input(const std::string& var, unsigned bit);
  Lit make_and(Lit a, Lit b);
  Lit make_or(Lit a, Lit b) { return lit_not(make_and(lit_not(a), lit_not(b))); }
  Lit make_xor(Lit a, Lit b);
  Lit make_mux(Lit sel, Lit then_lit, Lit else_lit);
  /// Existential quantification of `body` over the given input literals.
  Lit make_exists(std::span<const Lit> bound_inputs, Lit body);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::uint32_t id) const { return nodes_[id]; }
  const std::vector<InputLabel>& labels() const { return labels_; }
  const InputLabel& label_of(std::uint32_t input_node) const { return labels_[nodes_[input_node].aux]; }
  const std::vector<Quantifier>& quantifiers() const { return quantifiers_; }

  std::vector<Lit>& outputs() { return outputs_; }
  const std::vector<Lit>& outputs() const { return outputs_; }
  Lit output() const { return outputs_.at(0); }

  std::size_t and_count() const;
  /// Distinct AND nodes reachable from `roots`.
  std::size_t reachable_ands(std::span<const Lit> roots) const;
  /// Evaluates all outputs; `input_value(label)` supplies input bits. Quantifier
  /// nodes are evaluated by enumerating their bound inputs.
  std::vector<bool> simulate(const std::function<bool(const InputLabel&)>& input_value) const;

  /// ASCII AIGER (`aag`). Quantifier nodes are emitted as extra inputs whose
  /// symbol names the bound bits and the body literal.
  void write_aag(std::ostream& os, const std::vector<std::string>& output_names = {}) const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Lit, Lit>& p) const {
      return std::hash<std::uint64_t>()((std::uint64_t{p.first} << 32) | p.second);
    }
  };

  std::vector<Node> nodes_;
  std::vector<InputLabel> labels_;
  std::map<std::pair<std::string, unsigned>, std::uint32_t> input_index_;
  std::unordered_map<std::pair<Lit, Lit>, std::uint32_t, PairHash> strash_;
  std::vector<Quantifier> quantifiers_;
  std::vector<Lit> outputs_;
};

}  // namespace pbr
