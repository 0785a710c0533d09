#pragma once

#include <string>
#include <vector>

#include "difr/instance.hpp"

namespace difr {

struct CoverConstraint {
  std::vector<Vertex> members;  // red out-neighbors, ascending
  int demand = 0;
  Vertex source = 0;  // the demanded vertex this row comes from
};

/// Set multicover: pick the fewest elements so that each constraint has at
/// least `demand` of its members picked.
struct CoverModel {
  std::vector<Vertex> elements;  // ascending
  std::vector<CoverConstraint> constraints;
};

CoverModel build_cover_model(const Instance& instance, const DemandSet& demand);
CoverModel build_cover_model(const Instance& instance);

/// Exact minimum, lexicographically smallest among minima. Throws
/// PreconditionViolated when a constraint asks for more than it has.
std::vector<Vertex> solve_cover_exact(const CoverModel& model);

/// Greedy max-coverage; feasible, not necessarily minimum.
std::vector<Vertex> solve_cover_greedy(const CoverModel& model);

Recoloring solve_by_cover(const Instance& instance, const DemandSet& demand);
Recoloring solve_by_cover(const Instance& instance);

/// Vertex i is model.elements[i]; adjacent iff co-members of a constraint.
UndirectedGraph primal_graph(const CoverModel& model);
/// Vertex i is model.constraints[i]; adjacent iff they share an element.
UndirectedGraph dual_graph(const CoverModel& model);

/// Height of a DFS forest: an upper bound on treedepth (heuristic, not exact).
int treedepth_upper_bound(const UndirectedGraph& graph);

/// CPLEX LP text with variables x<id> and rows c<source>.
std::string export_lp(const CoverModel& model);

}  // namespace difr
