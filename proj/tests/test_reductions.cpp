#include "difr/io.hpp"
#include "difr/oracle.hpp"
#include "difr/reductions.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace difr;

namespace {

RectilinearFormula load_formula(const std::string& name) {
  return parse_formula(read_file(std::string(DIFR_TEST_DATA) + "/formulas/" + name));
}

}  // namespace

TEST_SUITE("reductions") {
  TEST_CASE("hitting set construction arithmetic") {
    const HittingSetInstance hs{3, {{0, 1, 2}}, 1};
    const auto r = reduce_hitting_set(hs, kHalf);
    CHECK(r.dummy_count == 2);
    CHECK(r.extra_blues == std::vector<int>{1});
    CHECK(r.instance.out_degree(r.set_vertex(0)) == 4);
    CHECK(p_deficiency(r.instance, r.set_vertex(0)) == 1);
    CHECK(r.max_deficiency == 1);
  }

  TEST_CASE("hitting set preconditions and thresholds") {
    const HittingSetInstance small{4, {{0, 1}, {0, 2, 3}}, 1};
    CHECK_THROWS_AS(reduce_hitting_set(small, kHalf), Error);
    CHECK_THROWS_AS(reduce_hitting_set(HittingSetInstance{5, {{0, 1, 2, 3}}, 1}, Ratio(1, 1)), Error);
    const HittingSetInstance four{4, {{0, 1, 2, 3}}, 1};
    const auto third = reduce_hitting_set(four, Ratio(1, 3));
    CHECK(third.extra_blues == std::vector<int>{1});
    CHECK(p_deficiency(third.instance, third.set_vertex(0)) == 1);
    for (const Ratio p : {Ratio(1, 4), Ratio(2, 5), Ratio(3, 5), Ratio(3, 4), Ratio(4, 5)}) {
      const HittingSetInstance big{7, {{0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 4, 6}}, 1};
      const auto r = reduce_hitting_set(big, p);
      for (int j = 0; j < r.set_count; ++j) CHECK(p_deficiency(r.instance, r.set_vertex(j)) == 1);
    }
  }

  TEST_CASE("hitting set lifting") {
    const HittingSetInstance hs{3, {{0, 1, 2}}, 1};
    const auto r = reduce_hitting_set(hs, kHalf);
    const auto flips = hitting_set_to_flips(r, {0});
    CHECK(verify(r.instance, flips).valid);
    CHECK(flips_to_hitting_set(r, flips) == std::vector<int>{0});
    CHECK_THROWS_AS(flips_to_hitting_set(r, Recoloring({3})), Error);
  }

  TEST_CASE("hitting set text format") {
    const auto hs = parse_hitting_set("# demo\n3 2 1\n1 2 3\n3 1\n");
    CHECK(hs.universe == 3);
    CHECK(hs.sets[1] == std::vector<int>{0, 2});
    CHECK(parse_hitting_set(emit_hitting_set(hs)).sets == hs.sets);
    CHECK_THROWS_AS(parse_hitting_set("3 1\n1 4\n"), Error);
    CHECK_THROWS_AS(parse_hitting_set("3 2\n1 2\n"), Error);
  }

  TEST_CASE("formula text format and validation") {
    const auto f = parse_formula("rsat 1\nvars x y z w\n+ z x y\n- y z w\n");
    CHECK(f.clauses[0].vars == std::array<int, 3>{0, 1, 2});
    CHECK(parse_formula(emit_formula(f)).clauses.size() == 2);
    CHECK_THROWS_AS(parse_formula("rsat 1\nvars x y\n+ x y y\n"), Error);
    CHECK_THROWS_AS(parse_formula("rsat 1\nvars a b c d\n+ a b c\n+ b c d\n"), Error);
    CHECK_THROWS_AS(parse_formula("vars a\n"), Error);
    CHECK_NOTHROW(parse_formula("rsat 1\nvars a b c d e\n+ a b e\n+ b c d\n"));
  }

  TEST_CASE("empty formula") {
    const auto r = reduce_rectilinear_3sat(RectilinearFormula{});
    CHECK(r.budget == 0);
    CHECK(r.instance.size() == 1);
    CHECK(illusion_set(r.instance, DemandSet::all(1)).empty());
  }

  TEST_CASE("single clause gadget") {
    const auto f = load_formula("f01.rsat");
    const auto r = reduce_rectilinear_3sat(f);
    CHECK(r.budget == r.ell[0] + r.ell[1] + r.ell[2]);
    CHECK(is_full_grid(r.instance));
    CHECK(r.max_deficiency == 1);
    const auto sat = brute_force_sat(f);
    REQUIRE(sat);
    const auto flips = assignment_to_flips(r, *sat);
    CHECK(flips.size() == r.budget);
    CHECK(verify(r.instance, flips).valid);
    CHECK(flips_to_assignment(r, flips) == *sat);
  }

  TEST_CASE("grid round trip on the corpus") {
    for (int i = 1; i <= 12; ++i) {
      char name[16];
      std::snprintf(name, sizeof name, "f%02d.rsat", i);
      CAPTURE(name);
      const auto f = load_formula(name);
      const auto r = reduce_rectilinear_3sat(f);
      const auto demand = DemandSet::all(r.instance.size());
      const auto sat = brute_force_sat(f);
      const auto found = brute_force_within_budget(r.instance, demand, r.budget);
      CHECK(found.has_value() == sat.has_value());
      if (found) {
        CHECK(satisfies(f, flips_to_assignment(r, *found)));
      }
      if (r.budget > 0) CHECK_FALSE(brute_force_within_budget(r.instance, demand, r.budget - 1));
    }
  }

  TEST_CASE("mixed gadget flips do not lift") {
    const auto r = reduce_rectilinear_3sat(load_formula("f01.rsat"));
    CHECK_THROWS_AS(flips_to_assignment(r, Recoloring(r.instance.red_vertices())), Error);
  }

  TEST_CASE("generator kinds satisfy their validators and are deterministic") {
    for (const auto& kind : generator_kinds()) {
      GenerateParams g;
      g.kind = kind;
      g.n = 6;
      g.seed = 42;
      const auto a = generate_random(g);
      CHECK(a == generate_random(g));
      if (a.kind()) CHECK(matches_kind(a, *a.kind()));
    }
    GenerateParams bad;
    bad.kind = "moebius";
    CHECK_THROWS_AS(generate_random(bad), Error);
    GenerateParams og;
    og.kind = "outward_grid";
    og.n = 3;
    og.red = 0.4;
    og.seed = 7;
    CHECK(is_outward_grid(generate_random(og)));
    GenerateParams tree;
    tree.kind = "directed_tree";
    tree.n = 10;
    tree.p = Ratio(2, 3);
    CHECK(is_underlying_tree(generate_random(tree)));
  }
}
