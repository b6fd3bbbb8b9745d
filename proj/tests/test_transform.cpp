#include <doctest.h>

#include "pbr/boolean/context.hpp"
#include "pbr/lang/parser.hpp"
#include "pbr/paths/enumerate.hpp"
#include "pbr/transform/transformers.hpp"
#include "support/oracle.hpp"
#include "support/programs.hpp"

using namespace pbr;

namespace {

Formula f(const std::string& text, const std::map<std::string, Sort>& vars, unsigned w = 2) {
  return Formula::atom(parse_expression(text, vars, w));
}

const std::map<std::string, Sort> kX{{"x", Sort::Word}};

// SSA names are not source syntax: parse over a, b, c and rename to x#0, x#1, x#2.
Formula ssa(const std::string& text, unsigned w) {
  const std::map<std::string, Sort> abc{{"a", Sort::Word}, {"b", Sort::Word}, {"c", Sort::Word}};
  return rename(f(text, abc, w), {{"a", "x#0"}, {"b", "x#1"}, {"c", "x#2"}});
}

Path twice_through_path() {
  const auto p = testing_programs::load("increment.prog");
  for (auto& path : enumerate_paths(p, 8))
    if (path.guard_bits == "110") return path;
  FAIL("missing path 110");
  return {};
}

}  // namespace

TEST_CASE("wp rules") {
  const auto assume = PathStmt::assume(parse_expression("!(x < 2)", kX, 2));
  const auto w = wp(f("x == 2", kX), assume);
  CHECK(to_string(w) == "!(x < 2) -> (x == 2)");
  SymbolicContext ctx(2);
  CHECK(ctx.equivalent(w, f("x <= 2", kX)));

  const auto inc = PathStmt::assign("x", Sort::Word, parse_expression("x + 1", kX, 2));
  CHECK(to_string(wp(f("x <= 2", kX), inc)) == "x + 1 <= 2");
  CHECK(wp(Formula::truth(true), inc).is_true());
  CHECK(oracle::valid(wp(Formula::truth(true), assume), 2));
}

TEST_CASE("sp rules") {
  SymbolicContext ctx(3);
  const auto lt = PathStmt::assume(parse_expression("x < 2", kX, 3));
  CHECK(ctx.equivalent(sp(f("x == 0", kX), lt), f("x == 0", kX)));
  const auto inc = PathStmt::assign("x", Sort::Word, parse_expression("x + 1", kX, 3));
  const auto s = sp(f("x == 1", kX), inc);
  CHECK(s.kind() == Formula::Kind::Exists);
  CHECK(ctx.equivalent(s, f("x == 2", kX)));
  CHECK(oracle::equivalent(s, f("x == 2", kX), 3));
  CHECK_FALSE(ctx.is_sat(sp(Formula::truth(false), inc)));
  CHECK_FALSE(ctx.is_sat(sp(Formula::truth(false), lt)));
}

TEST_CASE("quantifier counts") {
  const auto inc = PathStmt::assign("x", Sort::Word, parse_expression("x + 1", kX, 2));
  const auto phi = f("x < 3", kX);
  CHECK(count_quantifiers(wp(phi, inc)) == 0);
  CHECK(count_quantifiers(sp(phi, inc)) == 1);
  CHECK(count_quantifiers(sp(sp(phi, inc), inc)) == 2);
}

TEST_CASE("increment loop path transformers") {
  const Path path = twice_through_path();
  for (unsigned w : {2U, 4U}) {
    SymbolicContext ctx(w);
    CHECK(ctx.equivalent(sp_seq(ssa("a == 0", w), path), ssa("c == 2", w)));
    CHECK(ctx.is_valid(wp_seq(ssa("c == 2", w), path)));
    CHECK(holds(ctx, f("x == 0", kX, w), path, f("x == 2", kX, w)));
  }
  CHECK_FALSE(holds(f("x == 0", kX), path, f("x == 3", kX), 2));
  CHECK(holds(Formula::truth(false), path, f("x == 3", kX), 2));
}

TEST_CASE("empty sequences are the identity") {
  const auto phi = f("x < 3", kX);
  CHECK(sp_seq(phi, std::span<const PathStmt>{}) == phi);
  CHECK(wp_seq(phi, std::span<const PathStmt>{}) == phi);
}

TEST_CASE("formula substitution avoids capture") {
  const std::map<std::string, Sort> xy{{"x", Sort::Word}, {"y", Sort::Word}};
  const Formula body = f("x == y", xy);
  const Formula ex = Formula::exists("y", Sort::Word, body);  // ∃y. x = y, valid
  const Formula sub = substitute(ex, {{"x", Expr::var("y", Sort::Word)}});
  CHECK(free_vars(sub).count("y") == 1);
  CHECK(oracle::valid(sub, 2));
  CHECK(oracle::equivalent(rename(ex, {{"x", "z"}}), Formula::truth(true), 2));
  CHECK(to_string(ex) == "exists y. x == y");
}

TEST_CASE("duality on random paths") {
  oracle::Generator gen(7, 2, {"a", "b"});
  for (int i = 0; i < 60; ++i) {
    const unsigned w = 1 + gen.pick(3);
    oracle::Generator g(static_cast<std::uint64_t>(i) * 31 + 5, w, {"a", "b"});
    const Path path = to_ssa(g.path(1 + g.pick(4)));
    const Formula phi = at_entry(g.formula(1), path);
    const Formula psi = at_exit(g.formula(1), path);
    SymbolicContext ctx(w);
    const bool by_wp = ctx.is_valid(Formula::implies(phi, wp_seq(psi, path)));
    const bool by_sp = ctx.is_valid(Formula::implies(sp_seq(phi, path), psi));
    CHECK(by_wp == by_sp);
    CHECK(by_sp == oracle::valid(Formula::implies(sp_seq(phi, path), psi), w));
  }
}

TEST_CASE("sp is monotone in its precondition") {
  for (int i = 0; i < 40; ++i) {
    oracle::Generator g(static_cast<std::uint64_t>(i) + 1000, 2, {"a", "b"});
    const Path path = to_ssa(g.path(1 + g.pick(3)));
    const Formula strong = at_entry(g.formula(1), path);
    const Formula weak = Formula::disj(strong, at_entry(g.formula(1), path));
    SymbolicContext ctx(2);
    CHECK(ctx.is_valid(Formula::implies(sp_seq(strong, path), sp_seq(weak, path))));
  }
}
