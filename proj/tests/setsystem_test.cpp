#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "welzl/generators.hpp"
#include "welzl/partition.hpp"
#include "welzl/sampling.hpp"
#include "welzl/setsystem.hpp"

using namespace welzl;
using namespace welzl::testing;

namespace {

// X = {1, 2}, Y = {3} over A = {1, 2, 3}, written with 0-based ids.
SetSystem small_xy() { return SetSystem::from_members(3, {{0, 1}, {2}}); }

SetSystem c4() { return SetSystem::from_members(4, {{1, 2}, {0, 3}, {0, 3}, {1, 2}}); }

std::vector<Id> span_vec(std::span<const Id> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("build counts elements, sets and the size norm") {
  const std::vector<std::pair<std::int64_t, std::int64_t>> edges{{0, 0}, {0, 1}, {1, 2}};
  const SetSystem s = SetSystem::build(3, 2, edges);
  CHECK(s.num_elements() == 3);
  CHECK(s.num_sets() == 2);
  CHECK(s.size_norm() == 6);
  CHECK(s.is_consistent());

  const SetSystem empty = SetSystem::build(3, 0, {});
  CHECK(empty.size_norm() == 3);
  CHECK(empty.num_sets() == 0);
}

TEST_CASE("build drops duplicate edges and sorts members") {
  const std::vector<std::pair<std::int64_t, std::int64_t>> dup{{0, 1}, {0, 0}, {0, 1}, {1, 2}};
  const std::vector<std::pair<std::int64_t, std::int64_t>> clean{{0, 0}, {0, 1}, {1, 2}};
  CHECK(SetSystem::build(3, 2, dup) == SetSystem::build(3, 2, clean));
  CHECK(span_vec(SetSystem::build(3, 2, dup).members(0)) == std::vector<Id>{0, 1});
}

TEST_CASE("build rejects negative or out-of-range ids") {
  const std::vector<std::pair<std::int64_t, std::int64_t>> neg{{0, -1}};
  const std::vector<std::pair<std::int64_t, std::int64_t>> big{{2, 0}};
  CHECK_THROWS_AS(SetSystem::build(3, 2, neg), std::invalid_argument);
  CHECK_THROWS_AS(SetSystem::build(3, 2, big), std::invalid_argument);
  CHECK_THROWS_AS(SetSystem::build(-1, 2, {}), std::invalid_argument);
}

TEST_CASE("both adjacency views are transposes on random systems") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const SetSystem s = random_system(rng, 1 + rng() % 40, rng() % 40, 0.3);
    REQUIRE(s.is_consistent());
    std::size_t edges = 0;
    for (Id e = 0; e < s.num_elements(); ++e) {
      for (Id b : s.sets_containing(e)) CHECK(s.contains(b, e));
      edges += s.sets_containing(e).size();
    }
    CHECK(edges == s.num_edges());
    CHECK(s.size_norm() == s.num_elements() + s.num_edges());
  }
}

TEST_CASE("dual swaps roles") {
  const SetSystem d = dual(small_xy());
  CHECK(d.num_elements() == 2);
  CHECK(d.num_sets() == 3);
  CHECK(span_vec(d.members(0)) == std::vector<Id>{0});
  CHECK(span_vec(d.members(1)) == std::vector<Id>{0});
  CHECK(span_vec(d.members(2)) == std::vector<Id>{1});
}

TEST_CASE("dual is an involution, including isolated ids") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const SetSystem s = random_system(rng, rng() % 30, rng() % 30, 0.1);
    CHECK(dual(dual(s)) == s);
  }
}

TEST_CASE("grid neighborhood system equals its own dual") {
  const SetSystem g = gen_grid(5, 7);
  CHECK(dual(g) == g);
}

TEST_CASE("restrict") {
  const SetSystem s = small_xy();
  SUBCASE("identity") {
    const Restriction r = restrict(s, std::vector<Id>{0, 1, 2}, std::vector<Id>{0, 1});
    CHECK(r.system == s);
  }
  SUBCASE("single element") {
    const Restriction r = restrict(s, std::vector<Id>{0}, std::vector<Id>{0, 1});
    CHECK(span_vec(r.system.members(0)) == std::vector<Id>{0});
    CHECK(r.system.members(1).empty());
    CHECK(r.element_ids == std::vector<Id>{0});
  }
  SUBCASE("no elements") {
    const Restriction r = restrict(s, std::vector<Id>{}, std::vector<Id>{0, 1});
    CHECK(r.system.num_edges() == 0);
    CHECK(r.system.num_sets() == 2);
  }
  SUBCASE("lifting table follows the given order") {
    const Restriction r = restrict(s, std::vector<Id>{2, 0}, std::vector<Id>{1});
    CHECK(r.set_ids == std::vector<Id>{1});
    CHECK(r.element_ids == std::vector<Id>{2, 0});
    CHECK(span_vec(r.system.members(0)) == std::vector<Id>{0});
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(restrict(s, std::vector<Id>{3}, std::vector<Id>{}), std::out_of_range);
    CHECK_THROWS_AS(restrict(s, std::vector<Id>{}, std::vector<Id>{2}), std::out_of_range);
  }
}

TEST_CASE("twin partition examples") {
  SUBCASE("C4 elements") {
    const Partition p = twin_partition(c4(), Side::Elements);
    CHECK(p.num_classes() == 2);
    CHECK(p.class_of == std::vector<Id>{0, 1, 1, 0});
    CHECK(p.representative == std::vector<Id>{0, 1});
    CHECK(p.is_valid());
  }
  SUBCASE("sets over a sample") {
    const Partition p = twin_partition(small_xy(), Side::Sets, std::vector<Id>{0});
    CHECK(p.num_classes() == 2);
  }
  SUBCASE("all sets empty") {
    const SetSystem s = SetSystem::from_members(3, {{}, {}, {}});
    const Partition p = twin_partition(s, Side::Sets);
    CHECK(p.num_classes() == 1);
    CHECK(p.representative == std::vector<Id>{0});
  }
  SUBCASE("empty side") {
    const SetSystem s = SetSystem::from_members(3, {});
    CHECK(twin_partition(s, Side::Sets).num_classes() == 0);
  }
}

TEST_CASE("twin partition matches pairwise comparison (both sides)") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const SetSystem s = random_twinny_system(rng, 1 + rng() % 30, 1 + rng() % 30, 1 + rng() % 5);
    for (Side side : {Side::Elements, Side::Sets}) {
      const Partition p = twin_partition(s, side);
      REQUIRE(p.is_valid());
      // Same labelling rule (first occurrence) so the vectors agree exactly.
      CHECK(p.class_of == pairwise_twin_classes(neighborhoods(s, side)));
    }
  }
}

TEST_CASE("near twin max diff examples") {
  const SetSystem s = small_xy();
  Partition merged{Side::Sets, {0, 0}, {0}};
  CHECK(near_twin_max_diff(s, merged) == 3);
  CHECK(near_twin_max_diff(s, twin_partition(s, Side::Sets)) == 0);
  Partition singletons{Side::Sets, {0, 1}, {0, 1}};
  CHECK(near_twin_max_diff(s, singletons) == 0);
  CHECK_THROWS_AS(near_twin_max_diff(s, twin_partition(s, Side::Elements)),
                  std::invalid_argument);
}

TEST_CASE("near twin max diff matches quadratic recomputation") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng() % 200;
    const SetSystem s = random_twinny_system(rng, 1 + rng() % 40, m, 1 + rng() % 6);
    // Random partition with random representatives.
    const std::size_t classes = 1 + rng() % m;
    Partition p{Side::Sets, std::vector<Id>(m), std::vector<Id>(classes, 0)};
    for (Id b = 0; b < m; ++b) p.class_of[b] = b < classes ? b : static_cast<Id>(rng() % classes);
    for (Id k = 0; k < classes; ++k) {
      std::vector<Id> in;
      for (Id b = 0; b < m; ++b) {
        if (p.class_of[b] == k) in.push_back(b);
      }
      p.representative[k] = in[rng() % in.size()];
    }
    REQUIRE(p.is_valid());
    const auto nbhd = neighborhoods(s, Side::Sets);
    std::size_t expected = 0;
    for (Id b = 0; b < m; ++b) {
      expected = std::max(expected,
                          symmetric_difference(nbhd[b], nbhd[p.representative[p.class_of[b]]]));
    }
    CHECK(near_twin_max_diff(s, p) == expected);
  }
}

TEST_CASE("uniform sample edge cases") {
  Rng rng(3);
  CHECK(uniform_sample(10, 10, rng) == std::vector<Id>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(uniform_sample(10, 0, rng).empty());
  CHECK(uniform_sample(0, 0, rng).empty());
  CHECK_THROWS_AS(uniform_sample(3, 4, rng), std::invalid_argument);
}

TEST_CASE("uniform sample returns s distinct in-range ids") {
  Rng rng(99);
  for (std::size_t n = 0; n <= 40; ++n) {
    for (std::size_t s = 0; s <= n; ++s) {
      const auto w = uniform_sample(n, s, rng);
      REQUIRE(w.size() == s);
      for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(w[i] < n);
        if (i) CHECK(w[i - 1] < w[i]);
      }
    }
  }
}

TEST_CASE("uniform sample is deterministic per seed") {
  Rng a(1234), b(1234);
  CHECK(uniform_sample(1000, 100, a) == uniform_sample(1000, 100, b));
}

TEST_CASE("uniform sample inclusion frequencies follow the hypergeometric marginal") {
  // Each id is included with probability s/n exactly; over T trials its count
  // is Binomial(T, s/n).
  constexpr std::size_t n = 10'000, s = 1'000, trials = 100'000;
  Rng rng(20240601);
  std::vector<std::uint32_t> hits(n, 0);
  for (std::size_t t = 0; t < trials; ++t) {
    for (Id v : uniform_sample(n, s, rng)) ++hits[v];
  }
  const double p = double(s) / double(n);
  const double mean = trials * p;
  const double sd = std::sqrt(trials * p * (1 - p));
  double max_z = 0, sum_z2 = 0;
  std::size_t beyond4 = 0;
  for (auto h : hits) {
    const double z = std::abs(h - mean) / sd;
    max_z = std::max(max_z, z);
    sum_z2 += z * z;
    beyond4 += z > 4.0;
  }
  // 4 sigma per element, Bonferroni-adjusted across the 10^4 ids: under the
  // model P(|z| > 4) = 6.3e-5, so at most a couple of ids may exceed 4 and
  // none may exceed 5.
  CHECK(beyond4 <= 3);
  CHECK(max_z < 5.0);
  // Mean squared z-score near 1 (chi-square with 10^4 dof / 10^4).
  CHECK(sum_z2 / n == doctest::Approx(1.0).epsilon(0.06));
}
