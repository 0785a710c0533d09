#include <filesystem>

#include "difr/io.hpp"
#include "difr/reductions.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace difr;

TEST_SUITE("io") {
  TEST_CASE("figure file parses") {
    const auto f = parse_instance(read_file(std::string(DIFR_TEST_DATA) + "/fig1b.dif"));
    CHECK(f.instance.size() == 4);
    CHECK(f.instance.edges().size() == 4);
    CHECK(f.instance == fixtures::fig1b());
    CHECK_FALSE(f.demand);
  }

  TEST_CASE("canonical round trip of every corpus instance") {
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(DIFR_TEST_DATA)) {
      if (entry.path().extension() != ".dif") continue;
      const auto text = read_file(entry.path().string());
      CAPTURE(entry.path().string());
      CHECK(emit_instance(parse_instance(text)) == text);
      ++seen;
    }
    CHECK(seen >= 2);
  }

  TEST_CASE("extras and demand survive a round trip") {
    InstanceExtras extras;
    extras.coords = std::vector<Coord>{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    extras.layers = std::vector<int>{0, 0, 0, 0};
    extras.kind = KindTag::OutwardGrid;
    const Instance inst(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, fixtures::colors_from("BRRR"), Ratio(2, 3), extras);
    const InstanceFile file{inst, DemandSet::of(4, std::vector<Vertex>{0, 3})};
    const auto text = emit_instance(file);
    const auto back = parse_instance(text);
    CHECK(back.instance == inst);
    REQUIRE(back.demand);
    CHECK(*back.demand == *file.demand);
    CHECK(emit_instance(back) == text);
    const auto empty = emit_instance(Instance(0, {}, {}, kHalf));
    CHECK(emit_instance(parse_instance(empty)) == empty);
  }

  TEST_CASE("diagnostics") {
    auto message = [](std::string_view text) {
      try {
        parse_instance(text);
      } catch (const Error& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(message("difr 1\nn 2\np 3/2\ncolors BR\nedges 0\n").find("line 3") != std::string::npos);
    CHECK(message("difr 1\nn 2\np 1/2\ncolors BX\nedges 0\n").find("line 4, col 9") != std::string::npos);
    CHECK(message("difr 1\nn 2\np 1/2\ncolors BR\nedges 2\n0 1\n0 1\n").find("duplicate") != std::string::npos);
    CHECK(message("difr 1\nn 2\np 1/2\ncolors BR\nedges 1\n0 5\n").find("line 6") != std::string::npos);
    CHECK(message("difr 2\n").find("header") != std::string::npos);
    CHECK(message("difr 1\nn 2\np 1/2\ncolors BR\nedges 1\n").find("end of file") != std::string::npos);
    CHECK_FALSE(message("# comment\ndifr 1\n\nn 2\np 1/2 # half\ncolors BR\nedges 1\n0 1\n").size());
  }

  TEST_CASE("solutions") {
    const auto r = parse_solution("8\n5\n# note\n6\n7\n", 9);
    CHECK(r.flipped() == std::vector<Vertex>{5, 6, 7, 8});
    CHECK(emit_solution(r) == "5\n6\n7\n8\n");
    CHECK_THROWS_AS(parse_solution("9\n", 9), Error);
  }

  TEST_CASE("generated instances round trip byte-exactly") {
    for (const auto& kind : generator_kinds()) {
      GenerateParams g;
      g.kind = kind;
      g.n = 5;
      g.seed = 9;
      const auto text = emit_instance(generate_random(g));
      CHECK(emit_instance(parse_instance(text)) == text);
      CHECK(text == emit_instance(generate_random(g)));
    }
  }
}
