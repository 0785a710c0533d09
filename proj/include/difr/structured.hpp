#pragma once

#include <utility>
#include <vector>

#include "difr/instance.hpp"

namespace difr {

// Every solver here throws StructureMismatch when the instance is not of
// its class. The single-argument forms demand all vertices.

Recoloring solve_directed_cycle(const Instance& instance, const DemandSet& demand);
Recoloring solve_directed_cycle(const Instance& instance);

Recoloring solve_underlying_cycle(const Instance& instance, const DemandSet& demand);
Recoloring solve_underlying_cycle(const Instance& instance);

/// Red vertices joined when some remaining illusion vertex has exactly
/// these two as its out-neighbors.
struct AuxiliaryPairGraph {
  std::vector<Vertex> vertices;                  // ascending
  std::vector<std::pair<Vertex, Vertex>> edges;  // a < b, ascending, unique
};

struct OutwardGridResult {
  Recoloring recoloring;
  Recoloring forced;  // from the forcing rule
  AuxiliaryPairGraph aux;
  int matching_size = 0;
  Recoloring cover;  // minimum vertex cover of aux
};

OutwardGridResult analyze_outward_grid(const Instance& instance, const DemandSet& demand);
Recoloring solve_outward_grid(const Instance& instance, const DemandSet& demand);
Recoloring solve_outward_grid(const Instance& instance);

/// One fold step of the tree DP at a vertex u. Entry (flag, z) lives at
/// index flag * (cap + 1) + z where cap is the saturation bound of u.
struct TreeDPStage {
  Vertex child = -1;  // -1 for the base stage
  bool child_is_out = false;
  std::vector<int> cost;  // kTreeDPInf when unreachable
  // Back-pointers into the previous stage and the child's final table.
  std::vector<int> prev_z, child_flag, child_z;
};

inline constexpr int kTreeDPInf = 1 << 29;

/// Rooted DP over an underlying forest. stages[u].back() is the table for
/// the whole subtree of u; flag = 1 means u itself is flipped.
struct TreeDPTable {
  std::vector<Vertex> parent;  // -1 at roots
  std::vector<Vertex> roots;
  std::vector<int> cap;  // def_p(u) if demanded, else 0
  std::vector<std::vector<TreeDPStage>> stages;

  int cost(Vertex u, int flag, int z) const;
};

TreeDPTable build_tree_dp(const Instance& instance, const DemandSet& demand);
Recoloring solve_directed_tree(const Instance& instance, const DemandSet& demand);
Recoloring solve_directed_tree(const Instance& instance);

}  // namespace difr
