#include "difr/ptas.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <deque>

#include "difr/treewidth.hpp"

namespace difr {

int Layering::count() const {
  return layer.empty() ? 0 : *std::max_element(layer.begin(), layer.end()) + 1;
}

void validate_layering(const Instance& instance, const std::vector<int>& layers) {
  if (static_cast<int>(layers.size()) != instance.size())
    fail(ErrorCode::InvalidInput, "layering has " + std::to_string(layers.size()) +
                                      " entries for " + std::to_string(instance.size()) + " vertices");
  for (Vertex v = 0; v < instance.size(); ++v)
    if (layers[v] < 0) fail(ErrorCode::InvalidInput, "negative layer at vertex " + std::to_string(v));
  for (const auto& e : instance.edges())
    if (std::abs(layers[e.tail] - layers[e.head]) > 1)
      fail(ErrorCode::InvalidInput, "edge " + std::to_string(e.tail) + "->" + std::to_string(e.head) +
                                        " spans layers " + std::to_string(layers[e.tail]) + " and " +
                                        std::to_string(layers[e.head]));
}

Layering compute_layers(const Instance& instance) {
  if (instance.layers()) {
    validate_layering(instance, *instance.layers());
    return Layering{*instance.layers()};
  }
  if (!instance.coords())
    fail(ErrorCode::PreconditionViolated, "instance has neither layers nor coordinates");
  const auto& coords = *instance.coords();
  const int n = instance.size();
  Layering result{std::vector<int>(n, 0)};
  if (n == 0) return result;

  int r0 = INT_MAX, r1 = INT_MIN, c0 = INT_MAX, c1 = INT_MIN;
  for (const auto& c : coords) {
    r0 = std::min(r0, c.row);
    r1 = std::max(r1, c.row);
    c0 = std::min(c0, c.col);
    c1 = std::max(c1, c.col);
  }
  // Padded box: a one-cell empty frame around the bounding box.
  const long rows = static_cast<long>(r1) - r0 + 3, cols = static_cast<long>(c1) - c0 + 3;
  if (rows * cols > 50'000'000L) fail(ErrorCode::PreconditionViolated, "coordinate box too large");
  std::vector<int> occupant(rows * cols, -1);
  for (Vertex v = 0; v < n; ++v)
    occupant[(coords[v].row - r0 + 1) * cols + (coords[v].col - c0 + 1)] = v;

  // Multi-source BFS in the king's-move metric from every empty cell.
  std::vector<int> dist(rows * cols, -1);
  std::deque<long> queue;
  for (long cell = 0; cell < rows * cols; ++cell)
    if (occupant[cell] < 0) {
      dist[cell] = 0;
      queue.push_back(cell);
    }
  while (!queue.empty()) {
    const long cell = queue.front();
    queue.pop_front();
    const long r = cell / cols, c = cell % cols;
    for (long dr = -1; dr <= 1; ++dr)
      for (long dc = -1; dc <= 1; ++dc) {
        const long nr = r + dr, nc = c + dc;
        if (nr < 0 || nc < 0 || nr >= rows || nc >= cols) continue;
        const long next = nr * cols + nc;
        if (dist[next] >= 0) continue;
        dist[next] = dist[cell] + 1;
        queue.push_back(next);
      }
  }
  for (Vertex v = 0; v < n; ++v)
    result.layer[v] = dist[(coords[v].row - r0 + 1) * cols + (coords[v].col - c0 + 1)] - 1;
  validate_layering(instance, result.layer);
  return result;
}

BakerResult baker_solve(const Instance& instance, double epsilon, PieceSolver piece_solver) {
  if (!(epsilon > 0) || !std::isfinite(epsilon))
    fail(ErrorCode::PreconditionViolated, "epsilon must be positive");
  if (!piece_solver)
    piece_solver = [](const Instance& piece, const DemandSet& demand) {
      return solve_by_treewidth(piece, demand);
    };
  const auto layering = compute_layers(instance);
  const int top = layering.count() - 1;

  BakerResult result;
  result.epsilon = epsilon;
  const double ratio = 4.0 / epsilon;
  if (ratio > 1e6) fail(ErrorCode::PreconditionViolated, "epsilon too small");
  // Guard against 4/epsilon landing a hair above an integer.
  result.k = std::max(1, static_cast<int>(std::ceil(ratio - 1e-9)));
  const int k = result.k;

  int best = INT_MAX;
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> flips;
    for (int j = -1; i + j * (k + 1) + 1 <= top; ++j) {
      const int lo = i + j * (k + 1), hi = i + (j + 1) * (k + 1) + 1;
      std::vector<Vertex> members, responsible;
      for (Vertex v = 0; v < instance.size(); ++v) {
        const int l = layering.layer[v];
        if (l < lo || l > hi) continue;
        if (l > lo && l < hi) responsible.push_back(static_cast<Vertex>(members.size()));
        members.push_back(v);
      }
      if (responsible.empty()) continue;
      const Instance piece = induced_subinstance(instance, members);
      const DemandSet demand = DemandSet::of(piece.size(), responsible);
      if (illusion_set(piece, demand).empty()) continue;
      const Recoloring local = piece_solver(piece, demand);
      for (Vertex u : local.flipped()) flips.push_back(members[u]);
    }
    Recoloring candidate(std::move(flips));
    result.shift_sizes.push_back(candidate.size());
    if (candidate.size() < best) {
      best = candidate.size();
      result.shift = i;
      result.recoloring = std::move(candidate);
    }
  }
  return result;
}

}  // namespace difr
