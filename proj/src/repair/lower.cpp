#include "pbr/repair/lower.hpp"

#include <map>

#include "pbr/error.hpp"

namespace pbr {
namespace {

Expr word_var(const std::string& name) { return Expr::var(name, Sort::Word); }

class Lowering {
 public:
  Lowering(const RepairNetlist& n, unsigned width, const std::set<std::string>& taken)
      : net_(n), width_(width), taken_(taken) {
    for (const auto& v : n.x_vars) sorts_[v.name] = v.sort;
  }

  std::vector<Stmt> run(const std::vector<VarDecl>& outputs) {
    if (outputs.size() != net_.outputs.size()) throw InternalError("netlist and region outputs differ in number");

    // A copy of an output this block overwrites earlier has to go through bit reads.
    std::vector<std::optional<Expr>> direct(outputs.size());
    std::set<std::string> earlier;
    for (std::size_t k = 0; k < outputs.size(); ++k) {
      direct[k] = fold(outputs[k], net_.outputs[k]);
      if (direct[k]) {
        const Expr& e = direct[k]->kind() == Expr::Kind::Unary ? direct[k]->operand() : *direct[k];
        if (e.is_var() && earlier.contains(e.name())) direct[k].reset();
      }
      earlier.insert(outputs[k].name);
    }

    for (std::size_t k = 0; k < outputs.size(); ++k)
      if (!direct[k])
        for (Lit l : net_.outputs[k]) visit(l);

    std::vector<Stmt> out = std::move(reads_);
    out.insert(out.end(), gates_.begin(), gates_.end());
    for (std::size_t k = 0; k < outputs.size(); ++k)
      out.push_back(Stmt::assign(outputs[k].name, direct[k] ? *direct[k] : recompose(outputs[k], net_.outputs[k])));
    return out;
  }

 private:
  // Whole-output shortcuts: a constant, a copy of one input word, or a Bool wire.
  std::optional<Expr> fold(const VarDecl& v, const std::vector<Lit>& bits) {
    bool constant = true;
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == kLitTrue) value |= std::uint64_t{1} << i;
      else if (bits[i] != kLitFalse) constant = false;
    }
    if (constant) return v.sort == Sort::Bool ? Expr::boolean(value != 0) : Expr::word(value);

    const auto& aig = net_.aig;
    auto input_of = [&](Lit l) -> const Aig::InputLabel* {
      const auto& node = aig.node(lit_node(l));
      return node.kind == Aig::NodeKind::Input ? &aig.label_of(lit_node(l)) : nullptr;
    };
    if (v.sort == Sort::Bool) {
      const auto* label = input_of(bits[0]);
      if (label && sort_of(label->var) == Sort::Bool) {
        const Expr u = Expr::var(label->var, Sort::Bool);
        return lit_complemented(bits[0]) ? Expr::unary(UnaryOp::LogicalNot, u) : u;
      }
      return std::nullopt;
    }
    const auto* first = input_of(bits[0]);
    if (!first || sort_of(first->var) != Sort::Word) return std::nullopt;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      const auto* label = input_of(bits[i]);
      if (lit_complemented(bits[i]) || !label || label->var != first->var || label->bit != i) return std::nullopt;
    }
    return word_var(first->var);
  }

  Sort sort_of(const std::string& var) const {
    auto it = sorts_.find(var);
    if (it == sorts_.end()) throw InternalError("netlist input " + var + " is not a region input");
    return it->second;
  }

  std::string fresh(const std::string& stem) {
    std::string name = stem;
    for (int k = 1; taken_.contains(name) || used_.contains(name); ++k) name = stem + "_" + std::to_string(k);
    used_.insert(name);
    return name;
  }

  // Emits the reads and gates for the cone of `l`.
  void visit(Lit l) {
    const std::uint32_t id = lit_node(l);
    if (id == 0 || names_.contains(id)) return;
    const auto& node = net_.aig.node(id);
    if (node.kind == Aig::NodeKind::Input) {
      const auto& label = net_.aig.label_of(id);
      if (sort_of(label.var) == Sort::Bool)
        throw Error("cannot lower a repair that computes with the Boolean variable " + label.var);
      const std::string name = fresh("b_" + label.var + "_" + std::to_string(label.bit));
      Expr read = word_var(label.var);
      if (label.bit > 0) read = Expr::binary(BinaryOp::Shr, read, Expr::word(label.bit));
      if (width_ > 1) read = Expr::binary(BinaryOp::BitAnd, read, Expr::word(1));
      reads_.push_back(Stmt::assign(name, read));
      names_.emplace(id, name);
      return;
    }
    if (node.kind != Aig::NodeKind::And) throw InternalError("netlist holds a quantifier node");
    visit(node.fanin0);
    visit(node.fanin1);
    const std::string name = fresh("g_" + std::to_string(gate_counter_++));
    gates_.push_back(Stmt::assign(name, Expr::binary(BinaryOp::BitAnd, term(node.fanin0), term(node.fanin1))));
    names_.emplace(id, name);
  }

  Expr term(Lit l) {
    if (l == kLitFalse) return Expr::word(0);
    if (l == kLitTrue) return Expr::word(1);
    const Expr v = word_var(names_.at(lit_node(l)));
    return lit_complemented(l) ? Expr::binary(BinaryOp::Sub, Expr::word(1), v) : v;
  }

  Expr recompose(const VarDecl& v, const std::vector<Lit>& bits) {
    if (v.sort == Sort::Bool) return Expr::binary(BinaryOp::Eq, term(bits[0]), Expr::word(1));
    std::uint64_t constant = 0;
    std::optional<Expr> acc;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == kLitFalse) continue;
      if (bits[i] == kLitTrue) {
        constant |= std::uint64_t{1} << i;
        continue;
      }
      Expr t = term(bits[i]);
      if (i > 0) t = Expr::binary(BinaryOp::Shl, t, Expr::word(i));
      acc = acc ? Expr::binary(BinaryOp::BitOr, *acc, t) : t;
    }
    if (!acc) return Expr::word(constant);
    if (constant != 0) acc = Expr::binary(BinaryOp::BitOr, *acc, Expr::word(constant));
    return *acc;
  }

  const RepairNetlist& net_;
  unsigned width_;
  const std::set<std::string>& taken_;
  std::map<std::string, Sort> sorts_;
  std::set<std::string> used_;
  std::map<std::uint32_t, std::string> names_;
  std::vector<Stmt> reads_;
  std::vector<Stmt> gates_;
  int gate_counter_ = 0;
};

void mentioned(const Block& body, const LineRange& skip, std::set<std::string>& out) {
  for (const auto& s : body) {
    if (s.line >= skip.first && s.line <= skip.last) continue;
    if (s.kind == Stmt::Kind::Assign) out.insert(s.var);
    if (s.expr)
      for (const auto& [name, sort] : free_vars(s.expr)) out.insert(name);
    mentioned(s.then_body, skip, out);
    mentioned(s.else_body, skip, out);
  }
}

}  // namespace

std::vector<Stmt> netlist_to_stmts(const RepairNetlist& netlist, const std::vector<VarDecl>& outputs, unsigned width,
                                   const std::set<std::string>& taken) {
  std::set<std::string> avoid = taken;
  for (const auto& v : netlist.x_vars) avoid.insert(v.name);
  for (const auto& v : outputs) avoid.insert(v.name);
  return Lowering(netlist, width, avoid).run(outputs);
}

std::set<std::string> names_outside(const Program& p, const LineRange& region) {
  std::set<std::string> out;
  for (const auto& v : p.params) out.insert(v.name);
  if (p.pre)
    for (const auto& [name, sort] : free_vars(p.pre)) out.insert(name);
  if (p.post)
    for (const auto& [name, sort] : free_vars(p.post)) out.insert(name);
  mentioned(p.body, region, out);
  return out;
}

RepairedProgram apply_repair(const Program& p, const FaultRegion& region, const std::vector<Stmt>& stmts) {
  if (stmts.empty()) throw InternalError("empty repair");
  RepairedProgram out{p, region};
  auto loc = locate(out.program.body, region.lines.first);
  if (!loc) throw RegionError("fault region starts at missing statement " + std::to_string(region.lines.first));
  Block& block = *loc->block;
  const auto count = static_cast<std::size_t>(region.lines.last - region.lines.first + 1);
  if (loc->index + count > block.size()) throw RegionError("fault region extends past its block");
  const auto begin = block.begin() + static_cast<std::ptrdiff_t>(loc->index);
  block.erase(begin, begin + static_cast<std::ptrdiff_t>(count));
  block.insert(block.begin() + static_cast<std::ptrdiff_t>(loc->index), stmts.begin(), stmts.end());
  renumber(out.program.body);
  refresh_variables(out.program);
  out.region.lines = {region.lines.first, region.lines.first + static_cast<int>(stmts.size()) - 1};
  return out;
}

}  // namespace pbr
