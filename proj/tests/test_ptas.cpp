#include "difr/oracle.hpp"
#include "difr/ptas.hpp"
#include "difr/reductions.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace difr;

namespace {

Instance grid(int rows, int cols, std::uint64_t seed, double red = 0.5) {
  GenerateParams g;
  g.kind = "planar_grid";
  g.n = rows;
  g.cols = cols;
  g.seed = seed;
  g.red = red;
  return generate_random(g);
}

}  // namespace

TEST_SUITE("ptas") {
  TEST_CASE("layers from coordinates") {
    for (int l : compute_layers(grid(2, 2, 1)).layer) CHECK(l == 0);
    const auto l3 = compute_layers(grid(3, 3, 1)).layer;
    for (int v = 0; v < 9; ++v) CHECK(l3[v] == (v == 4 ? 1 : 0));
    CHECK(compute_layers(grid(5, 5, 1)).count() == 3);
    CHECK(compute_layers(grid(2, 3, 1)).count() == 1);
  }

  TEST_CASE("layer validation") {
    InstanceExtras extras;
    extras.layers = std::vector<int>{0, 2};
    const Instance bad(2, {{0, 1}}, fixtures::colors_from("BR"), kHalf);
    CHECK_THROWS_AS(validate_layering(bad, *extras.layers), Error);
    CHECK_THROWS_AS(compute_layers(fixtures::fig1b()), Error);
  }

  TEST_CASE("small grids are solved exactly") {
    InstanceExtras extras;
    extras.coords = std::vector<Coord>{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const Instance e4(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, fixtures::colors_from("BRRR"), kHalf, extras);
    const auto r = baker_solve(e4, 1.0);
    CHECK(r.k == 4);
    CHECK(r.recoloring.size() == 2);
    const auto clean = grid(4, 4, 3, 0.0);
    CHECK(baker_solve(clean, 1.0).recoloring.size() == 0);
    CHECK(baker_solve(clean, 0.5).k == 8);
    CHECK_THROWS_AS(baker_solve(e4, 0.0), Error);
  }

  TEST_CASE("ratio and feasibility on random grids") {
    for (int i = 0; i < 30; ++i) {
      const auto inst = grid(4, 4, 100 + i);
      const auto opt = brute_force_min_recoloring(inst);
      REQUIRE(opt);
      for (double eps : {1.0, 0.5}) {
        const auto r = baker_solve(inst, eps);
        CHECK(verify(inst, r.recoloring).valid);
        CHECK(r.recoloring.size() <= (1 + eps) * opt->size());
        double mean = 0;
        for (int s : r.shift_sizes) mean += s;
        mean /= static_cast<double>(r.shift_sizes.size());
        CHECK(r.recoloring.size() <= mean + 1e-9);
      }
    }
  }

  TEST_CASE("narrow bands force real splitting") {
    // k = 1 cuts a 7x7 grid (four layers) into several pieces per shift.
    for (int i = 0; i < 10; ++i) {
      const auto inst = grid(7, 7, 300 + i);
      const auto r = baker_solve(inst, 4.0);
      CHECK(r.k == 1);
      CHECK(verify(inst, r.recoloring).valid);
    }
  }
}
