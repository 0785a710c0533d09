#include "difr/oracle.hpp"
#include "difr/reductions.hpp"
#include "difr/structured.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace difr;
using fixtures::colors_from;

namespace {

Instance e6(Ratio p = kHalf) {
  return Instance(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, colors_from("BRBR"), p);
}

Instance with_coords(int n, std::vector<Edge> edges, const std::string& colors, std::vector<Coord> coords,
                     Ratio p = kHalf) {
  InstanceExtras extras;
  extras.coords = std::move(coords);
  return Instance(n, std::move(edges), colors_from(colors), p, extras);
}

void check_against_oracle(const std::string& kind, const std::function<Recoloring(const Instance&)>& solve,
                          int rounds, std::uint64_t seed) {
  const Ratio ps[] = {Ratio(1, 3), kHalf, Ratio(2, 3)};
  for (int i = 0; i < rounds; ++i) {
    GenerateParams g;
    g.kind = kind;
    g.seed = seed + i;
    g.p = ps[i % 3];
    g.red = 0.3 + 0.1 * (i % 5);
    g.n = kind == "outward_grid" ? 2 + i % 2 : 3 + i % 10;
    g.cols = kind == "outward_grid" ? 2 + i % 3 : 0;
    const auto inst = generate_random(g);
    const auto got = solve(inst);
    const auto want = brute_force_min_recoloring(inst);
    REQUIRE(want);
    CHECK(verify(inst, got).valid);
    CHECK(got.size() == want->size());
  }
}

}  // namespace

TEST_SUITE("structured") {
  TEST_CASE("directed cycles") {
    CHECK(solve_directed_cycle(e6()).size() == 2);
    CHECK(solve_directed_cycle(e6().with_colors(colors_from("BBBB"))).size() == 0);
    const Instance red3(3, {{0, 1}, {1, 2}, {2, 0}}, colors_from("RRR"), kHalf);
    CHECK(solve_directed_cycle(red3).size() == 3);
    CHECK_THROWS_AS(solve_directed_cycle(fixtures::fig1b()), Error);
  }

  TEST_CASE("underlying cycles") {
    const Instance a(4, {{0, 1}, {0, 3}, {1, 2}, {3, 2}}, colors_from("BRBR"), kHalf);
    CHECK(solve_underlying_cycle(a).size() == 1);
    CHECK(solve_underlying_cycle(e6()).size() == 2);
    CHECK(solve_underlying_cycle(a.with_colors(colors_from("BBBB"))).size() == 0);
    CHECK(solve_underlying_cycle(a.with_p(Ratio(0, 1))).size() == 0);
    CHECK(solve_underlying_cycle(a.with_p(Ratio(2, 3))).size() == 2);
    CHECK(is_underlying_cycle(fixtures::fig1b()));
    CHECK_THROWS_AS(solve_underlying_cycle(fixtures::fig1a()), Error);
  }

  TEST_CASE("outward grids") {
    const auto e4 = with_coords(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, "BRRR", {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    const auto r = analyze_outward_grid(e4, DemandSet::all(4));
    CHECK(r.recoloring.size() == 2);
    CHECK(r.forced.contains(3));
    CHECK(solve_outward_grid(e4.with_colors(colors_from("BBBB"))).size() == 0);
    const auto path = with_coords(3, {{0, 1}, {1, 2}}, "BRB", {{0, 0}, {0, 1}, {0, 2}});
    CHECK(solve_outward_grid(path).flipped() == std::vector<Vertex>{1});
    CHECK_THROWS_AS(solve_outward_grid(fixtures::fig1a()), Error);
  }

  TEST_CASE("auxiliary graph is a forest and the cover matches the matching") {
    for (int i = 0; i < 200; ++i) {
      GenerateParams g;
      g.kind = "outward_grid";
      g.n = 3 + i % 4;
      g.cols = 3 + i % 3;
      g.seed = 500 + i;
      g.red = 0.6;
      const auto inst = generate_random(g);
      const auto r = analyze_outward_grid(inst, DemandSet::all(inst.size()));
      CHECK(r.cover.size() == r.matching_size);
      CHECK(static_cast<int>(r.aux.edges.size()) < static_cast<int>(r.aux.vertices.size()) + 1);
      CHECK(verify(inst, r.recoloring).valid);
    }
  }

  TEST_CASE("directed trees") {
    const Instance star(4, {{0, 1}, {0, 2}, {0, 3}}, colors_from("BRRR"), kHalf);
    CHECK(solve_directed_tree(star).size() == 2);
    const Instance edge(2, {{0, 1}}, colors_from("BR"), kHalf);
    CHECK(solve_directed_tree(edge).size() == 1);
    const Instance chain(3, {{1, 0}, {2, 1}}, colors_from("RBR"), kHalf);
    CHECK(solve_directed_tree(chain).size() == 1);
    CHECK_THROWS_AS(solve_directed_tree(e6()), Error);
  }

  TEST_CASE("specialized solvers agree with the oracle") {
    check_against_oracle("directed_cycle", [](const Instance& i) { return solve_directed_cycle(i); }, 60, 1);
    check_against_oracle("underlying_cycle", [](const Instance& i) { return solve_underlying_cycle(i); }, 150, 2);
    check_against_oracle("outward_grid", [](const Instance& i) { return solve_outward_grid(i); }, 150, 3);
    check_against_oracle("directed_tree", [](const Instance& i) { return solve_directed_tree(i); }, 150, 4);
  }

  TEST_CASE("tree solver honors partial demand") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 100; ++i) {
      GenerateParams g;
      g.kind = "directed_tree";
      g.n = 10;
      g.seed = 900 + i;
      g.p = fixtures::random_ratio(rng, 4);
      const auto inst = generate_random(g);
      std::vector<Vertex> chosen;
      for (Vertex v = 0; v < inst.size(); ++v)
        if (rng() % 3) chosen.push_back(v);
      const auto demand = DemandSet::of(inst.size(), chosen);
      const auto got = solve_directed_tree(inst, demand);
      CHECK(verify(inst, got, demand).valid);
      CHECK(got.size() == brute_force_min_recoloring(inst, demand)->size());
    }
  }
}
