#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "difr/instance.hpp"

namespace difr {

// ---- Hitting Set --------------------------------------------------------

struct HittingSetInstance {
  int universe = 0;                    // elements 0..universe-1
  std::vector<std::vector<int>> sets;  // each sorted, nonempty
  int budget = 0;
};

/// Text: "n m [k]" then m lines of 1-based element ids; '#' comments.
HittingSetInstance parse_hitting_set(std::string_view text);
std::string emit_hitting_set(const HittingSetInstance& hs);

/// Vertex layout: element reds 0..n-1, set blues n..n+m-1, then dummies.
struct HittingSetReduction {
  Instance instance;
  int budget = 0;
  int universe = 0;
  int set_count = 0;
  int dummy_count = 0;
  std::vector<int> extra_blues;  // dummies wired to each set vertex
  int max_deficiency = 0;        // measured over all vertices

  Vertex set_vertex(int j) const { return universe + j; }
};

/// Requires 0 < p < 1 and |A_j| > ceil(1/p) for all j. Each set vertex gets
/// the fewest dummy out-neighbors that leave it with p-deficiency exactly 1;
/// the construction is checked and rejected if that fails.
HittingSetReduction reduce_hitting_set(const HittingSetInstance& hs, Ratio p);

Recoloring hitting_set_to_flips(const HittingSetReduction& r, const std::vector<int>& hitting_set);
/// Throws Infeasible if a flip is not an element vertex.
std::vector<int> flips_to_hitting_set(const HittingSetReduction& r, const Recoloring& flips);

// ---- Rectilinear monotone 3-SAT ----------------------------------------

struct RectilinearClause {
  bool positive = true;
  std::array<int, 3> vars{};  // ascending axis positions
};

/// Variables sit on a horizontal axis in declaration order; positive
/// clauses are drawn above it and negative ones below.
struct RectilinearFormula {
  std::vector<std::string> names;
  std::vector<RectilinearClause> clauses;
};

/// Text:
///   rsat 1
///   vars <name>...
///   + <name> <name> <name>
///   - <name> <name> <name>
/// Clause literals may appear in any order; '#' starts a comment.
RectilinearFormula parse_formula(std::string_view text);
std::string emit_formula(const RectilinearFormula& formula);

/// Three distinct variables per clause, and clauses on one side must be
/// disjoint or nested between two consecutive legs of the outer clause.
void validate_formula(const RectilinearFormula& formula);

bool satisfies(const RectilinearFormula& formula, const std::vector<bool>& assignment);
/// First satisfying assignment in binary counting order (x1 is the low bit).
std::optional<std::vector<bool>> brute_force_sat(const RectilinearFormula& formula);

struct GridReduction {
  Instance instance;  // full grid, p = 1/2, coordinates attached
  int budget = 0;     // sum of ell
  std::vector<int> ell;
  std::vector<std::vector<Vertex>> positive_reds, negative_reds, controllers;
  std::vector<Vertex> clause_vertices, pendants;
  int max_deficiency = 0;
};

/// Each variable becomes a cycle of alternating red variable-vertices and
/// blue controllers drawn as the outline of a comb-shaped region whose arms
/// reach the clause vertices. Unused cells are blue dummies.
GridReduction reduce_rectilinear_3sat(const RectilinearFormula& formula);

/// True flips every positive variable-vertex of x, False every negative one.
Recoloring assignment_to_flips(const GridReduction& r, const std::vector<bool>& assignment);
/// Throws Infeasible when some gadget is not flipped all-positive or
/// all-negative.
std::vector<bool> flips_to_assignment(const GridReduction& r, const Recoloring& flips);

// ---- Random instances ---------------------------------------------------

struct GenerateParams {
  std::string kind = "generic";
  int n = 10;     // vertex count, or rows for grid kinds
  int cols = 0;   // grid kinds; 0 means square
  double red = 0.5;
  Ratio p = kHalf;
  std::uint64_t seed = 1;
};

/// Kinds: directed_cycle, underlying_cycle, outward_grid, grid,
/// directed_tree, dag_bipartite, planar_grid, generic. Deterministic in
/// the seed across platforms.
Instance generate_random(const GenerateParams& params);
std::vector<std::string> generator_kinds();

}  // namespace difr
