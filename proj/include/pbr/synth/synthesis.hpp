#pragma once

#include <iosfwd>
#include <vector>

#include "pbr/boolean/aig.hpp"
#include "pbr/boolean/context.hpp"
#include "pbr/lang/expr.hpp"
#include "pbr/transform/formula.hpp"

namespace pbr {

/// ∀x̄ ∃ȳ. Φ over canonical names: `x_vars` are uncontrollable, `y_vars` are
/// the outputs to be computed.
struct SynthesisProblem {
  Formula phi;
  std::vector<VarDecl> x_vars;
  std::vector<VarDecl> y_vars;
  unsigned width = 2;
};

/// Combinational implementation of ȳ over the bits of x̄. Inputs of `aig` are
/// labeled with x̄ names; `outputs[k][i]` is bit i of y_vars[k].
struct RepairNetlist {
  Aig aig;
  std::vector<VarDecl> x_vars;
  std::vector<VarDecl> y_vars;
  std::vector<std::vector<Lit>> outputs;
  std::size_t gate_count = 0;
};

/// Registers x̄ as inputs and ȳ as outputs of `ctx`, then builds the BDD of Φ.
/// Throws InternalError when Φ has other free variables.
Bdd relation_bdd(SymbolicContext& ctx, const SynthesisProblem& p);

bool is_realizable(SymbolicContext& ctx, const SynthesisProblem& p);
bool is_realizable(const SynthesisProblem& p);

/// Witness functions for ȳ, one output bit at a time in variable order: with
/// R the relation with later ȳ bits quantified away, bit y_i is set to
/// R|y_i=1, and the choice is substituted before the next bit. The result is
/// checked to satisfy Φ for every x̄ (InternalError otherwise).
///
/// Throws Unrealizable carrying the smallest x̄ without any ȳ.
RepairNetlist extract(SymbolicContext& ctx, const SynthesisProblem& p);
RepairNetlist extract(const SynthesisProblem& p);

/// Distinct AND nodes reachable from the outputs.
std::size_t count_gates(const RepairNetlist& n);

/// Output values for a concrete x̄ valuation.
std::vector<unsigned long long> evaluate(const RepairNetlist& n, const std::map<std::string, unsigned long long>& x);

/// ASCII AIGER with one output per ȳ bit.
void write_aag(std::ostream& os, const RepairNetlist& n);

}  // namespace pbr
