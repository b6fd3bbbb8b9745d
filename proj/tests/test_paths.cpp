#include <doctest.h>

#include <set>

#include "pbr/error.hpp"
#include "pbr/paths/enumerate.hpp"
#include "support/programs.hpp"

using namespace pbr;

TEST_CASE("minmax has sixteen paths in guard order") {
  const auto p = testing_programs::load("minmax.prog");
  const auto paths = enumerate_paths(p, kDefaultUnrollBound);
  REQUIRE(paths.size() == 16);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    std::string bits;
    for (int b = 3; b >= 0; --b) bits.push_back(((i >> b) & 1U) ? '1' : '0');
    CHECK(paths[i].guard_bits == bits);
    CHECK_FALSE(paths[i].bound_exceeded);
  }
  // 0000: two assignments and four negated guards.
  CHECK(paths[0].statements.size() == 6);
  CHECK(paths[15].statements.size() == 10);
}

TEST_CASE("paths are in SSA form") {
  const auto p = testing_programs::load("minmax.prog");
  const auto path = enumerate_paths(p, 8)[8];  // 1000
  CHECK(path.guard_bits == "1000");
  CHECK(to_string(path.statements[0]) == "most#1 = input1#0;");
  CHECK(to_string(path.statements[2]) == "assume(most#1 < input2#0);");
  CHECK(to_string(path.statements[3]) == "most#2 = input2#0;");
  CHECK(path.entry_map.at("input1") == "input1#0");
  CHECK(path.ssa_map.at("most") == "most#2");
  CHECK(path.ssa_map.at("least") == "least#1");

  std::set<std::string> targets;
  for (const auto& s : path.statements)
    if (s.kind == PathStmt::Kind::Assign) CHECK(targets.insert(s.target).second);
}

TEST_CASE("region spans and splitting") {
  const auto p = testing_programs::load("minmax.prog");
  const auto paths = enumerate_paths(p, 8, LineRange{4, 4});
  for (const auto& path : paths) {
    CHECK(path.region_span.has_value() == (path.guard_bits[0] == '1'));
    if (!path.region_span) {
      CHECK_THROWS_AS(split_at_region(path), RegionNotOnPath);
      continue;
    }
    const auto split = split_at_region(path);
    CHECK(split.region.size() == 1);
    CHECK(split.prefix.statements.size() == 3);
    CHECK(split.prefix.ssa_map.at("most") == "most#1");
    CHECK(split.suffix.entry_map.at("most") == "most#2");
    CHECK(split.suffix.ssa_map == path.ssa_map);
  }
}

TEST_CASE("loops unroll up to the bound") {
  const auto p = testing_programs::load("increment.prog");
  const auto paths = enumerate_paths(p, 3);
  REQUIRE(paths.size() == 5);
  CHECK(paths[0].guard_bits == "0");
  CHECK(paths[1].guard_bits == "10");
  CHECK(paths[2].guard_bits == "110");
  CHECK(paths[3].guard_bits == "1110");
  CHECK(paths[4].guard_bits == "1111");
  CHECK(paths[4].bound_exceeded);
  for (int i = 0; i < 4; ++i) CHECK_FALSE(paths[static_cast<std::size_t>(i)].bound_exceeded);
  CHECK(to_string(paths[2]) ==
        "assume(x#0 < 2);\nx#1 = x#0 + 1;\nassume(x#1 < 2);\nx#2 = x#1 + 1;\nassume(!(x#2 < 2));\n");
}

TEST_CASE("strip_ssa undoes to_ssa") {
  const auto p = testing_programs::load("minmax.prog");
  for (const auto& path : enumerate_paths(p, 8)) {
    const auto raw = strip_ssa(path.statements);
    const auto again = to_ssa(raw);
    CHECK(again.statements == path.statements);
  }
  CHECK(base_name("most#12") == "most");
  CHECK(base_name("most") == "most");
}

TEST_CASE("asserts in the body are rejected") {
  const auto p = parse_program("prog f(x) pre: true assert(x < 2); post: true", 2);
  CHECK_THROWS_AS(enumerate_paths(p, 8), Error);
}
