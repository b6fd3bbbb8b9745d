#include <doctest.h>

#include <sstream>

#include "pbr/boolean/bdd.hpp"
#include "pbr/boolean/bitblast.hpp"
#include "pbr/boolean/context.hpp"
#include "pbr/error.hpp"
#include "pbr/lang/parser.hpp"
#include "support/oracle.hpp"
#include "support/programs.hpp"

using namespace pbr;

namespace {

Formula f(const std::string& text, const std::map<std::string, Sort>& vars, unsigned w = 2) {
  return Formula::atom(parse_expression(text, vars, w));
}

bool simulate_one(const Aig& aig, const oracle::Env& env) {
  return aig.simulate([&](const Aig::InputLabel& l) { return ((env.at(l.var) >> l.bit) & 1U) != 0; })[0];
}

}  // namespace

TEST_CASE("x < 2 at width 2 is the negated high bit") {
  const auto aig = bitblast(f("x < 2", {{"x", Sort::Word}}), 2);
  for (std::uint64_t x = 0; x < 4; ++x) CHECK(simulate_one(aig, {{"x", x}}) == (((x >> 1) & 1U) == 0));
  SymbolicContext ctx(2);
  const Bdd b = ctx.to_bdd(aig);
  CHECK(b == ctx.manager().negate(ctx.var_bit("x", 1)));
}

TEST_CASE("x == x is constant true") {
  const auto aig = bitblast(f("x == x", {{"x", Sort::Word}}), 3);
  CHECK(aig.output() == kLitTrue);
  SymbolicContext ctx(3);
  CHECK(ctx.to_bdd(aig) == ctx.manager().one());
}

TEST_CASE("minmax postcondition matches the evaluator on all inputs") {
  const auto p = testing_programs::load("minmax.prog");
  const Formula post = Formula::atom(p.post);
  const auto aig = bitblast(post, 2);
  SymbolicContext ctx(2);
  const Bdd b = ctx.to_bdd(aig);
  std::size_t checked = 0;
  oracle::for_all(p.vars, 2, [&](const oracle::Env& env) {
    const bool want = oracle::eval(post, env, 2);
    CHECK(simulate_one(aig, env) == want);
    CHECK(ctx.manager().evaluate(b, [&](Level l) {
      auto [var, bit] = ctx.at(l);
      return ((env.at(var) >> bit) & 1U) != 0;
    }) == want);
    ++checked;
    return true;
  });
  CHECK(checked == 1024);
}

TEST_CASE("quantified BDDs") {
  SymbolicContext ctx(2);
  const std::map<std::string, Sort> xy{{"x", Sort::Word}, {"y", Sort::Word}};
  CHECK(ctx.is_valid(Formula::exists("x", Sort::Word, f("x == y", xy))));
  auto& m = ctx.manager();
  const Bdd eq = ctx.to_bdd(f("y == x", xy));
  CHECK(m.forall(eq, ctx.levels("y")) == m.zero());
  CHECK(m.exists(eq, ctx.levels("y")) == m.one());
  CHECK(m.is_valid(m.one()));
  CHECK_FALSE(m.is_sat(m.zero()));
}

TEST_CASE("any_sat picks the smallest assignment") {
  SymbolicContext ctx(2);
  auto& m = ctx.manager();
  const Bdd lt = ctx.to_bdd(f("x < 2", {{"x", Sort::Word}}));
  CHECK(ctx.decode(m.any_sat(lt), {"x"}).at("x") == 0);
  const Bdd ge = ctx.to_bdd(f("x >= 2", {{"x", Sort::Word}}));
  CHECK(ctx.decode(m.any_sat(ge), {"x"}).at("x") == 2);
  CHECK_THROWS_AS(m.any_sat(m.zero()), Error);
}

TEST_CASE("variable order interleaves bits and puts outputs last") {
  SymbolicContext ctx(3);
  ctx.declare("a", Sort::Word);
  ctx.declare("b", Sort::Word);
  ctx.declare_output("y", Sort::Word);
  CHECK(ctx.level("a", 0) < ctx.level("b", 0));
  CHECK(ctx.level("b", 0) < ctx.level("a", 1));
  CHECK(ctx.level("b", 2) < ctx.level("y", 0));
  CHECK(ctx.level("y", 0) < ctx.level("y", 1));
  CHECK(ctx.at(ctx.level("b", 2)) == std::make_pair(std::string("b"), 2U));
  CHECK(ctx.level_name(ctx.level("y", 1)) == "y[1]");
}

TEST_CASE("random formulas agree with the evaluator") {
  for (int i = 0; i < 150; ++i) {
    const unsigned w = 1 + static_cast<unsigned>(i % 3);
    oracle::Generator g(static_cast<std::uint64_t>(i) + 17, w, {"a", "b", "c"}, {"p"});
    const Formula phi = g.formula(3, {"a", "c"});
    SymbolicContext ctx(w);
    const Bdd b = ctx.to_bdd(phi);
    const auto aig = bitblast(phi, w);
    std::map<std::string, Sort> vars{{"a", Sort::Word}, {"b", Sort::Word}, {"c", Sort::Word}, {"p", Sort::Bool}};
    oracle::for_all(oracle::decls(vars), w, [&](const oracle::Env& env) {
      const bool want = oracle::eval(phi, env, w);
      const bool got = ctx.manager().evaluate(b, [&](Level l) {
        auto [var, bit] = ctx.at(l);
        return ((env.at(var) >> bit) & 1U) != 0;
      });
      CHECK(got == want);
      CHECK(simulate_one(aig, env) == want);
      return got == want;
    });
    // Existential then universal closure decide satisfiability and validity.
    auto& m = ctx.manager();
    const auto support = m.support(b);
    CHECK((m.exists(b, support) == m.one()) == m.is_sat(b));
    CHECK((m.forall(b, support) == m.one()) == m.is_valid(b));
  }
}

TEST_CASE("equal functions share one BDD node") {
  const std::map<std::string, Sort> v{{"a", Sort::Word}, {"b", Sort::Word}};
  SymbolicContext ctx(3);
  CHECK(ctx.to_bdd(f("a + b == 0", v, 3)) == ctx.to_bdd(f("a == 0 - b", v, 3)));
  CHECK(ctx.to_bdd(f("a < b", v, 3)) == ctx.to_bdd(f("!(b <= a)", v, 3)));
  CHECK(ctx.to_bdd(f("a < b", v, 3)) != ctx.to_bdd(f("a <= b", v, 3)));
  CHECK(ctx.to_bdd(f("(a << 3) == 0", v, 3)) == ctx.manager().one());
  CHECK(ctx.to_bdd(f("(a >> b) <= a", v, 3)) == ctx.manager().one());
}

TEST_CASE("BDD nodes stay reduced and unique") {
  BddManager m;
  const Bdd a = m.var(0), b = m.var(1), c = m.var(2);
  const Bdd g = m.disj(m.conj(a, b), m.conj(m.negate(a), c));
  CHECK(g == m.ite(a, b, c));
  CHECK(m.cofactor(g, 0, true) == b);
  CHECK(m.compose(g, 1, c) == m.ite(a, c, c));
  CHECK(m.support(g) == std::vector<Level>{0, 1, 2});
  CHECK(m.dag_size(g) == 5);
  for (std::uint32_t id = 2; id < m.node_count(); ++id) {
    const Bdd n{id};
    CHECK(m.low(n) != m.high(n));
    CHECK(m.level(n) < m.level(m.low(n)));
    CHECK(m.level(n) < m.level(m.high(n)));
  }
  std::ostringstream dot;
  m.write_dot(dot, g, [](Level l) { return "v" + std::to_string(l); });
  CHECK(dot.str().find("digraph") == 0);
}

TEST_CASE("node limit raises a resource error") {
  BddManager m(40);
  Bdd acc = m.zero();
  CHECK_THROWS_AS(
      [&] {
        for (Level i = 0; i < 40; i += 2) acc = m.disj(acc, m.conj(m.var(i), m.var(i + 1)));
      }(),
      ResourceLimit);
}

TEST_CASE("AIG hashing and dump") {
  Aig aig;
  const Lit a = aig.input("a", 0), b = aig.input("b", 0);
  CHECK(aig.make_and(a, b) == aig.make_and(b, a));
  CHECK(aig.make_and(a, lit_not(a)) == kLitFalse);
  CHECK(aig.make_and(a, kLitTrue) == a);
  aig.outputs().push_back(aig.make_xor(a, b));
  CHECK(aig.and_count() == 4);
  std::ostringstream os;
  aig.write_aag(os);
  CHECK(os.str().rfind("aag 6 2 0 1 4\n", 0) == 0);
  CHECK(os.str().find("i0 a[0]") != std::string::npos);
}
