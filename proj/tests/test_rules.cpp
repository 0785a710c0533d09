#include "difr/oracle.hpp"
#include "difr/rules.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace difr;

TEST_SUITE("rules") {
  TEST_CASE("forcing cascade on the four-cycle example") {
    const auto r = rule_single_red_outneighbor(fixtures::fig1a());
    CHECK(r.forced.flipped() == std::vector<Vertex>{5, 6, 7, 8});
    CHECK(r.reduced_demand.members().empty());
  }

  TEST_CASE("rule is inert without a unique choice") {
    const auto blue = fixtures::fig1b().with_colors(fixtures::colors_from("BBBB"));
    CHECK(rule_single_red_outneighbor(blue).forced.size() == 0);
    const Instance star(4, {{0, 1}, {0, 2}, {0, 3}}, fixtures::colors_from("BRRR"), kHalf);
    CHECK(rule_single_red_outneighbor(star).forced.size() == 0);
  }

  TEST_CASE("high-p solver") {
    const Instance cycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, fixtures::colors_from("BRBR"), Ratio(2, 3));
    CHECK(high_p_bounded_outdegree_solve(cycle).flipped() == std::vector<Vertex>{1, 3});
    const Instance lone(2, {}, fixtures::colors_from("RB"), Ratio(2, 3));
    CHECK(high_p_bounded_outdegree_solve(lone).size() == 0);
    const Instance path(2, {{0, 1}}, fixtures::colors_from("BR"), Ratio(3, 4));
    CHECK(high_p_bounded_outdegree_solve(path).flipped() == std::vector<Vertex>{1});
    const Instance star(4, {{0, 1}, {0, 2}, {0, 3}}, fixtures::colors_from("BRRR"), Ratio(2, 3));
    CHECK_THROWS_AS(high_p_bounded_outdegree_solve(star), Error);
    CHECK_THROWS_AS(high_p_bounded_outdegree_solve(cycle.with_p(kHalf)), Error);
  }

  TEST_CASE("half equivalence predicate") {
    InstanceExtras grid;
    grid.coords = std::vector<Coord>{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const Instance g(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, fixtures::colors_from("BRRB"), Ratio(1, 3), grid);
    CHECK(is_half_equivalent(g));
    CHECK(is_half_equivalent(fixtures::fig1a()));
    const Instance star(4, {{0, 1}, {0, 2}, {0, 3}}, fixtures::colors_from("BRRR"), kHalf);
    CHECK_FALSE(is_half_equivalent(star));
  }

  TEST_CASE("forcing is safe against the oracle") {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 300; ++round) {
      const auto inst = fixtures::random_digraph(rng, 10, 0.25, fixtures::random_ratio(rng, 4));
      const auto demand = DemandSet::all(inst.size());
      const auto r = rule_single_red_outneighbor(inst, demand);
      const auto rest = apply_recoloring(inst, r.forced);
      const auto full = brute_force_min_recoloring(inst, demand);
      const auto tail = brute_force_min_recoloring(rest, r.reduced_demand);
      REQUIRE(full);
      REQUIRE(tail);
      CHECK(full->size() == r.forced.size() + tail->size());
    }
  }

  TEST_CASE("p-illusion matches majority illusion at out-degree two") {
    std::mt19937_64 rng(8);
    for (int round = 0; round < 100; ++round) {
      const int n = 9;
      std::vector<Edge> edges;
      for (int v = 0; v < n; ++v) {
        const int d = std::uniform_int_distribution<int>(0, 2)(rng);
        std::vector<int> heads;
        while (static_cast<int>(heads.size()) < d) {
          const int w = std::uniform_int_distribution<int>(0, n - 1)(rng);
          if (w != v && std::find(heads.begin(), heads.end(), w) == heads.end()) heads.push_back(w);
        }
        for (int w : heads) edges.push_back({v, w});
      }
      const Ratio p(std::uniform_int_distribution<int>(1, 5)(rng), 10);
      const Instance inst(n, edges, fixtures::random_colors(rng, n), p);
      REQUIRE(is_half_equivalent(inst));
      for (Vertex v = 0; v < n; ++v) CHECK((p_deficiency(inst, v) > 0) == (deficiency(inst, v) > 0));
    }
  }
}
