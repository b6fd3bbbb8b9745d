#pragma once

#include <map>
#include <optional>
#include <string>

#include "pbr/lang/program.hpp"

namespace pbr {

/// Valuation of program variables; Bool values are 0 or 1.
using ConcreteState = std::map<std::string, unsigned long long>;

/// Value of an expression; missing variables read as 0.
unsigned long long evaluate(const Expr& e, const ConcreteState& state, unsigned width);

enum class RunStatus { Finished, Blocked, BoundHit, AssertFailed };

struct RunResult {
  RunStatus status = RunStatus::Finished;
  ConcreteState state;
};

/// Big-step execution. Each loop body runs at most `unroll_bound` times; a
/// loop whose guard still holds afterwards stops the run with BoundHit.
RunResult run(const Program& p, const ConcreteState& input, unsigned width, unsigned unroll_bound);

/// Final state, or nothing when an assume failed or the bound was hit.
std::optional<ConcreteState> interpret(const Program& p, const ConcreteState& input, unsigned width,
                                       unsigned unroll_bound);

constexpr unsigned kMaxExhaustiveBits = 24;

/// Every input satisfying the precondition either is filtered by an assume or
/// runs to completion within the bound and satisfies the postcondition.
/// Inputs are the variables of input_variables(p); all others start at 0.
/// Throws Error when the inputs span more than kMaxExhaustiveBits bits.
bool verify_exhaustive(const Program& p, unsigned width, unsigned unroll_bound);

/// First input (in counting order) that violates the check above, if any.
std::optional<ConcreteState> find_failing_input(const Program& p, unsigned width, unsigned unroll_bound);

}  // namespace pbr
