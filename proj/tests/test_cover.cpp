#include "difr/cover.hpp"
#include "difr/oracle.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace difr;

namespace {

Instance star3() {
  return Instance(4, {{0, 1}, {0, 2}, {0, 3}}, fixtures::colors_from("BRRR"), kHalf);
}

}  // namespace

TEST_SUITE("cover") {
  TEST_CASE("model construction") {
    const auto m = build_cover_model(fixtures::fig1b());
    CHECK(m.elements == std::vector<Vertex>{2, 3});
    REQUIRE(m.constraints.size() == 2);
    for (const auto& c : m.constraints) {
      CHECK(c.members == std::vector<Vertex>{2, 3});
      CHECK(c.demand == 1);
    }
    const auto clean = fixtures::fig1b().with_colors(fixtures::colors_from("BBBB"));
    CHECK(build_cover_model(clean).constraints.empty());
    const auto s = build_cover_model(star3());
    REQUIRE(s.constraints.size() == 1);
    CHECK(s.constraints[0].demand == 2);
  }

  TEST_CASE("exact solver examples") {
    CHECK(solve_cover_exact(build_cover_model(fixtures::fig1b())) == std::vector<Vertex>{2});
    CHECK(solve_cover_exact(build_cover_model(star3())) == std::vector<Vertex>{1, 2});
    CHECK(solve_cover_exact(CoverModel{}).empty());
    CoverModel bad;
    bad.elements = {0};
    bad.constraints.push_back({{0}, 2, 5});
    CHECK_THROWS_AS(solve_cover_exact(bad), Error);
  }

  TEST_CASE("primal and dual graphs") {
    const auto m = build_cover_model(fixtures::fig1b());
    const auto primal = primal_graph(m);
    CHECK(primal.n == 2);
    CHECK(primal.edge_count() == 1);
    const auto dual = dual_graph(m);
    CHECK(dual.n == 2);
    CHECK(dual.edge_count() == 1);

    CoverModel disjoint;
    disjoint.elements = {1, 2};
    disjoint.constraints = {{{1}, 1, 0}, {{2}, 1, 3}};
    CHECK(dual_graph(disjoint).edge_count() == 0);

    CoverModel one;
    one.elements = {1, 2, 3, 4};
    one.constraints = {{{1, 2, 3, 4}, 2, 0}};
    CHECK(primal_graph(one).edge_count() == 6);
    CHECK(treedepth_upper_bound(primal_graph(one)) == 4);
  }

  TEST_CASE("lp export") {
    const auto lp = export_lp(build_cover_model(fixtures::fig1b()));
    CHECK(lp.find("Minimize") != std::string::npos);
    CHECK(lp.find("c0: x2 + x3 >= 1") != std::string::npos);
    CHECK(lp.find("Binary") != std::string::npos);
    CHECK(lp.rfind("End") != std::string::npos);
  }

  TEST_CASE("exact and greedy against the oracle") {
    std::mt19937_64 rng(4);
    for (int round = 0; round < 300; ++round) {
      const auto inst = fixtures::random_digraph(rng, 12, 0.3, fixtures::random_ratio(rng));
      const auto oracle = brute_force_min_recoloring(inst);
      REQUIRE(oracle);
      const auto exact = solve_by_cover(inst);
      CHECK(exact == *oracle);
      const auto greedy = Recoloring(solve_cover_greedy(build_cover_model(inst)));
      CHECK(verify(inst, greedy).valid);
      CHECK(greedy.size() >= exact.size());
    }
  }

  TEST_CASE("demand subsets") {
    std::mt19937_64 rng(12);
    for (int round = 0; round < 100; ++round) {
      const auto inst = fixtures::random_digraph(rng, 10, 0.35, kHalf);
      std::vector<Vertex> chosen;
      for (Vertex v = 0; v < inst.size(); ++v)
        if (rng() % 2) chosen.push_back(v);
      const auto demand = DemandSet::of(inst.size(), chosen);
      const auto exact = solve_by_cover(inst, demand);
      CHECK(verify(inst, exact, demand).valid);
      CHECK(exact.size() == brute_force_min_recoloring(inst, demand)->size());
    }
  }
}
