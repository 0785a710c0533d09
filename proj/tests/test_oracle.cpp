#include "difr/oracle.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace difr;

TEST_SUITE("oracle") {
  TEST_CASE("figure instances") {
    const auto a = brute_force_min_recoloring(fixtures::fig1a());
    REQUIRE(a);
    CHECK(a->flipped() == std::vector<Vertex>{5, 6, 7, 8});
    const auto b = brute_force_min_recoloring(fixtures::fig1b());
    REQUIRE(b);
    CHECK(b->flipped() == std::vector<Vertex>{2});
    const auto clean = fixtures::fig1b().with_colors(fixtures::colors_from("BBBB"));
    CHECK(brute_force_min_recoloring(clean)->size() == 0);
  }

  TEST_CASE("size cap and candidate guard") {
    OracleOptions capped;
    capped.size_cap = 3;
    CHECK_FALSE(brute_force_min_recoloring(fixtures::fig1a(), capped));
    const int n = 30;
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({0, v});
    std::vector<Color> colors(n, Color::Red);
    colors[0] = Color::Blue;
    CHECK_THROWS_AS(brute_force_min_recoloring(Instance(n, edges, colors, kHalf)), Error);
  }

  TEST_CASE("hitting set oracle") {
    CHECK(*brute_force_hitting_set(3, {{0, 1, 2}}) == std::vector<int>{0});
    CHECK(*brute_force_hitting_set(3, {{0, 1}, {1, 2}}) == std::vector<int>{1});
    CHECK(*brute_force_hitting_set(3, {{0}, {1}}) == std::vector<int>{0, 1});
    CHECK_FALSE(brute_force_hitting_set(3, {{0}, {1}}, 1));
  }

  TEST_CASE("single demanded star needs half its deficiency") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 200; ++round) {
      const int d = std::uniform_int_distribution<int>(1, 9)(rng);
      std::vector<Edge> edges;
      for (int v = 1; v <= d; ++v) edges.push_back({0, v});
      auto colors = fixtures::random_colors(rng, d + 1);
      colors[0] = Color::Blue;
      const Instance star(d + 1, edges, colors, kHalf);
      const auto demand = DemandSet::of(d + 1, std::vector<Vertex>{0});
      CHECK(brute_force_min_recoloring(star, demand)->size() == (deficiency(star, 0) + 1) / 2);
    }
  }

  TEST_CASE("decision search agrees with minimum search") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 300; ++round) {
      const auto inst = fixtures::random_digraph(rng, 10, 0.3, fixtures::random_ratio(rng));
      const auto demand = DemandSet::all(inst.size());
      const auto best = brute_force_min_recoloring(inst, demand);
      REQUIRE(best);
      const auto within = brute_force_within_budget(inst, demand, best->size());
      REQUIRE(within);
      CHECK(within->size() <= best->size());
      CHECK(verify(inst, *within).valid);
      if (best->size() > 0) CHECK_FALSE(brute_force_within_budget(inst, demand, best->size() - 1));
    }
  }

  TEST_CASE("oracle output verifies and is lexicographically least") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 60; ++round) {
      const auto inst = fixtures::random_digraph(rng, 7, 0.4, fixtures::random_ratio(rng));
      const auto best = brute_force_min_recoloring(inst);
      REQUIRE(best);
      CHECK(verify(inst, *best).valid);
      const auto reds = inst.red_vertices();
      const int r = static_cast<int>(reds.size());
      std::vector<Vertex> least;
      bool found = false;
      for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        if (std::popcount(mask) != best->size()) continue;
        std::vector<Vertex> pick;
        for (int i = 0; i < r; ++i)
          if (mask >> i & 1u) pick.push_back(reds[i]);
        if (!verify(inst, Recoloring(pick)).valid) continue;
        if (!found || pick < least) least = pick;
        found = true;
      }
      CHECK(found);
      CHECK(least == best->flipped());
    }
  }
}
