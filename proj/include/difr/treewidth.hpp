#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "difr/instance.hpp"

namespace difr {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;  // each sorted
  std::vector<std::pair<int, int>> edges;

  int width() const;
};

/// Min-fill elimination ordering (ties: fewer neighbors, then smaller id).
TreeDecomposition heuristic_decomposition(const UndirectedGraph& graph);

/// Throws InvalidInput naming the first violated property.
void validate_decomposition(const UndirectedGraph& graph, const TreeDecomposition& td);

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  std::vector<int> bag;  // sorted
  int vertex = -1;       // introduced or forgotten vertex
  std::vector<int> children;
};

/// Children always have smaller indices than their parent; the root is the
/// last node and has an empty bag.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;

  int root() const { return static_cast<int>(nodes.size()) - 1; }
  int width() const;
};

NiceTreeDecomposition make_nice(const TreeDecomposition& td, int root = 0);
void validate_nice(const UndirectedGraph& graph, const NiceTreeDecomposition& nice);

/// Exact minimum recoloring; cost grows with (2 * max def_p)^width.
Recoloring solve_by_treewidth(const Instance& instance, const DemandSet& demand,
                              const NiceTreeDecomposition& nice);
Recoloring solve_by_treewidth(const Instance& instance, const DemandSet& demand);
Recoloring solve_by_treewidth(const Instance& instance);

struct OuterplanarResult {
  Recoloring recoloring;
  int width = 0;        // of the decomposition actually used
  int lambda = 0;       // number of layers
  int width_bound = 0;  // 3 * lambda - 1
};

OuterplanarResult solve_outerplanar(const Instance& instance, std::span<const int> layers,
                                    const DemandSet& demand);

/// PACE .td text: "s td <bags> <max bag size> <n>", "b <i> <v...>" with
/// 1-based ids, then one "<i> <j>" line per tree edge.
std::string write_td(const TreeDecomposition& td, int vertex_count);
TreeDecomposition read_td(std::string_view text, int* vertex_count = nullptr);

}  // namespace difr
