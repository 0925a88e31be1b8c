#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "welzl/cover.hpp"
#include "welzl/generators.hpp"
#include "welzl/partition.hpp"

using namespace welzl;
using namespace welzl::testing;

TEST_CASE("prefix") {
  const SetSystem s = gen_prefix(3);
  CHECK(members_of(s) == Members{{}, {0}, {0, 1}, {0, 1, 2}});
  CHECK(gen_prefix(8).num_sets() == 9);
  CHECK_THROWS_AS(gen_prefix(0), std::invalid_argument);
}

TEST_CASE("grid") {
  SUBCASE("2x2 is C4") {
    CHECK(members_of(gen_grid(2, 2)) == Members{{1, 2}, {0, 3}, {0, 3}, {1, 2}});
  }
  SUBCASE("degrees and symmetry") {
    const SetSystem g = gen_grid(7, 5);
    CHECK(is_neighborhood_system(g));
    CHECK(g.num_elements() == 35);
    // 2 * (rows * (cols - 1) + cols * (rows - 1)) directed edges.
    CHECK(g.num_edges() == 2 * (7 * 4 + 5 * 6));
    for (Id v = 0; v < 35; ++v) {
      const std::size_t deg = g.members(v).size();
      CHECK(deg >= 2);
      CHECK(deg <= 4);
    }
  }
  SUBCASE("degenerate sizes") { CHECK_THROWS_AS(gen_grid(1, 5), std::invalid_argument); }
}

TEST_CASE("bounded degree") {
  const SetSystem g = gen_bounded_degree(10, 3, 1);
  CHECK(is_neighborhood_system(g));
  for (Id v = 0; v < 10; ++v) CHECK(g.members(v).size() == 3);
  CHECK(gen_bounded_degree(200, 4, 9) == gen_bounded_degree(200, 4, 9));
  CHECK_FALSE(gen_bounded_degree(200, 4, 9) == gen_bounded_degree(200, 4, 10));
  CHECK_THROWS_AS(gen_bounded_degree(9, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_bounded_degree(3, 3, 1), std::invalid_argument);
}

TEST_CASE("halfplanes") {
  SUBCASE("extreme lines") {
    HalfplaneInstance inst;
    inst.points = {{0.1, 0.2}, {0.5, 0.9}, {0.7, 0.3}};
    // Normal pointing up: y <= offset.
    const double up = std::numbers::pi / 2;
    inst.ranges = {{up, -1.0}, {up, 2.0}, {up, 0.5}};
    const SetSystem s = halfplane_system(inst);
    CHECK(members_of(s) == Members{{}, {0, 1, 2}, {0, 2}});
  }
  SUBCASE("membership matches the geometry") {
    const HalfplaneInstance inst = sample_halfplanes(50, 30, 17);
    const SetSystem s = halfplane_system(inst);
    for (Id j = 0; j < 30; ++j) {
      for (Id i = 0; i < 50; ++i) CHECK(s.contains(j, i) == inst.ranges[j].contains(inst.points[i]));
    }
    CHECK(gen_halfplane(50, 30, 17) == s);
  }
  SUBCASE("ranges are not all trivial") {
    const SetSystem s = gen_halfplane(200, 100, 3);
    std::size_t proper = 0;
    for (Id j = 0; j < 100; ++j) proper += !s.members(j).empty() && s.members(j).size() < 200;
    CHECK(proper > 50);
  }
}

TEST_CASE("twin expansion") {
  const SetSystem base = gen_grid(3, 4);
  SUBCASE("factor 1 is the identity") { CHECK(add_twins(base, 1, 5) == base); }
  SUBCASE("copies are twins of their origin") {
    const TwinExpansion ex = expand_twins(base, 3, 5);
    CHECK(ex.system.num_sets() == base.num_sets());
    CHECK(ex.origin.size() == ex.system.num_elements());
    CHECK(ex.system.num_elements() >= base.num_elements());
    CHECK(ex.system.num_elements() <= 3 * base.num_elements());
    const auto nb = neighborhoods(ex.system, Side::Elements);
    const auto orig = neighborhoods(base, Side::Elements);
    for (Id v = 0; v < ex.origin.size(); ++v) CHECK(nb[v] == orig[ex.origin[v]]);
    // Distinct origins keep distinct twin classes.
    CHECK(twin_partition(ex.system, Side::Elements).num_classes() ==
          twin_partition(base, Side::Elements).num_classes());
  }
  SUBCASE("factor 0 rejected") { CHECK_THROWS_AS(add_twins(base, 0, 1), std::invalid_argument); }
}

TEST_CASE("generate dispatches by family") {
  CHECK(generate({"prefix", {6}, 0}) == gen_prefix(6));
  CHECK(generate({"grid", {3, 5}, 0}) == gen_grid(3, 5));
  CHECK(generate({"regular", {20, 3}, 4}) == gen_bounded_degree(20, 3, 4));
  CHECK(generate({"halfplane", {30, 10}, 4}) == gen_halfplane(30, 10, 4));
  CHECK_THROWS_AS(generate({"nope", {1}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate({"grid", {3}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate({"grid", {3, -1}, 0}), std::invalid_argument);
  CHECK(describe({"grid", {2, 2}, 1}) == "gen grid 2 2 seed=1");
}
