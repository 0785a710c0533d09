#pragma once

#include "difr/instance.hpp"

namespace difr {

struct ForcedFlips {
  Recoloring forced;
  /// Demanded vertices still under p-illusion once `forced` is applied.
  DemandSet reduced_demand;
};

/// Exhaustively forces flips that are the only way to clear a demanded
/// vertex: whenever def_p(v) equals the number of red out-neighbors of v,
/// all of them are flipped (the single-red-out-neighbor rule is the case
/// def_p(v) = r_v = 1). Iterates in ascending id order to a fixpoint.
ForcedFlips rule_single_red_outneighbor(const Instance& instance, const DemandSet& demand);
ForcedFlips rule_single_red_outneighbor(const Instance& instance);

/// Optimal solution for max out-degree <= 2 and p > 1/2, where every
/// demanded vertex needs all of its out-neighbors blue.
Recoloring high_p_bounded_outdegree_solve(const Instance& instance, const DemandSet& demand);
Recoloring high_p_bounded_outdegree_solve(const Instance& instance);

/// True iff max out-degree <= 2 and 0 < p <= 1/2; then p-illusion and
/// majority illusion coincide vertex by vertex.
bool is_half_equivalent(const Instance& instance);

}  // namespace difr
