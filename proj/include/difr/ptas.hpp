#pragma once

#include <functional>
#include <vector>

#include "difr/instance.hpp"

namespace difr {

/// Outerplanar layer per vertex; underlying edges join layers at most one
/// apart.
struct Layering {
  std::vector<int> layer;

  int count() const;  // max layer + 1, or 0 when empty
};

/// Explicit layers are validated and passed through. Otherwise, from grid
/// coordinates, a vertex's layer is its Chebyshev distance to the nearest
/// empty cell minus one (cells outside the bounding box are empty).
Layering compute_layers(const Instance& instance);

/// Throws InvalidInput when sizes mismatch, a layer is negative, or an edge
/// spans more than one layer.
void validate_layering(const Instance& instance, const std::vector<int>& layers);

using PieceSolver = std::function<Recoloring(const Instance&, const DemandSet&)>;

struct BakerResult {
  Recoloring recoloring;
  double epsilon = 0;
  int k = 0;
  int shift = 0;                  // the winning shift
  std::vector<int> shift_sizes;   // solution size per shift
};

/// k = ceil(4 / epsilon). For every shift i, pieces span layers
/// [i + j(k+1), i + (j+1)(k+1) + 1] and are held responsible for the inner
/// band [i + j(k+1) + 1, i + (j+1)(k+1)]. The piece solver must be exact
/// for the ratio guarantee; the default is the treewidth DP.
BakerResult baker_solve(const Instance& instance, double epsilon, PieceSolver piece_solver = {});

}  // namespace difr
