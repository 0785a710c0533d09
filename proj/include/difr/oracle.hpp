#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "difr/instance.hpp"

namespace difr {

struct OracleOptions {
  /// Largest flip count to try; beyond it the oracle reports infeasible.
  int size_cap = INT_MAX;
  /// Guard on the number of candidate red vertices (reds with a demanded
  /// in-neighbor under p-illusion).
  int max_candidates = 24;
};

/// Exhaustive search over red subsets in increasing cardinality, each
/// cardinality in lexicographic order. Returns the lexicographically
/// smallest minimum recoloring, or nullopt when none fits in size_cap.
std::optional<Recoloring> brute_force_min_recoloring(const Instance& instance,
                                                     const DemandSet& demand,
                                                     OracleOptions options = {});
std::optional<Recoloring> brute_force_min_recoloring(const Instance& instance,
                                                     OracleOptions options = {});

/// Exhaustive bounded search tree for the decision question "is there a
/// recoloring of size <= budget". Branches on a still-violated vertex over
/// its unflipped red out-neighbors; prunes with a disjoint-neighborhood
/// packing bound. Suited to instances with many reds but a small budget.
std::optional<Recoloring> brute_force_within_budget(const Instance& instance,
                                                    const DemandSet& demand, int budget);

/// Minimum hitting set of `family` over {0..universe_size-1}, enumerated by
/// increasing size in lexicographic order. Requires universe_size <= 20.
std::optional<std::vector<int>> brute_force_hitting_set(int universe_size,
                                                        const std::vector<std::vector<int>>& family,
                                                        int size_cap = INT_MAX);

}  // namespace difr
