#include "difr/structured.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "difr/rules.hpp"

namespace difr {

namespace {

// p = 0 never leaves anyone under illusion; p > 1/2 with out-degree <= 2
// has a closed-form answer. Returns true when one of these applied.
bool route_bounded_outdegree(const Instance& instance, const DemandSet& demand, Recoloring& out) {
  if (instance.p().is_zero()) {
    out = Recoloring{};
    return true;
  }
  if (instance.p().above_half()) {
    out = high_p_bounded_outdegree_solve(instance, demand);
    return true;
  }
  return false;
}

}  // namespace

Recoloring solve_directed_cycle(const Instance& instance, const DemandSet& demand) {
  if (!is_directed_cycle(instance)) fail(ErrorCode::StructureMismatch, "not a directed cycle");
  if (instance.p().is_zero()) return Recoloring{};
  // Every vertex has a single out-neighbor, so a red one must be flipped.
  std::vector<Vertex> flips;
  for (Vertex v = 0; v < instance.size(); ++v) {
    const Vertex u = instance.out(v)[0];
    if (demand.contains(v) && instance.is_red(u)) flips.push_back(u);
  }
  return Recoloring(std::move(flips));
}

Recoloring solve_directed_cycle(const Instance& instance) {
  return solve_directed_cycle(instance, DemandSet::all(instance.size()));
}

Recoloring solve_underlying_cycle(const Instance& instance, const DemandSet& demand) {
  if (!is_underlying_cycle(instance)) fail(ErrorCode::StructureMismatch, "not an underlying cycle");
  Recoloring routed;
  if (route_bounded_outdegree(instance, demand, routed)) return routed;

  const int n = instance.size();
  const Ratio p = instance.p();
  std::vector<Color> colors = instance.colors();
  std::vector<Vertex> flips;
  auto need = [&](Vertex v) {
    if (!demand.contains(v)) return 0L;
    const auto outs = instance.out(v);
    long blue = 0;
    for (Vertex u : outs) blue += colors[u] == Color::Blue;
    return std::max(0L, static_cast<long>(p.ceil_times(static_cast<long>(outs.size()))) - blue);
  };
  auto red_outs = [&](Vertex v) {
    std::vector<Vertex> reds;
    for (Vertex u : instance.out(v))
      if (colors[u] == Color::Red) reds.push_back(u);
    return reds;
  };
  auto flip = [&](Vertex u) {
    colors[u] = Color::Blue;
    flips.push_back(u);
  };
  // Does red a also serve an illusion vertex other than x?
  auto serves_other = [&](Vertex a, Vertex x) {
    for (Vertex y : instance.in(a))
      if (y != x && need(y) > 0) return true;
    return false;
  };

  for (;;) {
    bool forced = true;
    while (forced) {
      forced = false;
      for (Vertex v = 0; v < n; ++v) {
        if (need(v) == 0) continue;
        const auto reds = red_outs(v);
        if (static_cast<long>(reds.size()) != need(v)) continue;
        for (Vertex u : reds) flip(u);
        forced = true;
      }
    }

    // What is left needs one of two red out-neighbors. Each pair is an edge
    // of a graph with max degree 2 on the reds; cover path ends first and
    // only cut into a cycle when nothing else remains.
    Vertex pick = -1, fallback = -1;
    for (Vertex x = 0; x < n && pick < 0; ++x) {
      if (need(x) == 0) continue;
      const auto reds = red_outs(x);
      const bool sa = serves_other(reds[0], x), sb = serves_other(reds[1], x);
      if (!sa && !sb)
        pick = reds[0];
      else if (sa != sb)
        pick = sa ? reds[0] : reds[1];
      else if (fallback < 0)
        fallback = reds[0];
    }
    if (pick < 0) pick = fallback;
    if (pick < 0) break;
    flip(pick);
  }
  return Recoloring(std::move(flips));
}

Recoloring solve_underlying_cycle(const Instance& instance) {
  return solve_underlying_cycle(instance, DemandSet::all(instance.size()));
}

OutwardGridResult analyze_outward_grid(const Instance& instance, const DemandSet& demand) {
  if (!is_outward_grid(instance)) fail(ErrorCode::StructureMismatch, "not an outward grid");
  OutwardGridResult result;
  if (route_bounded_outdegree(instance, demand, result.recoloring)) return result;

  const auto rule = rule_single_red_outneighbor(instance, demand);
  result.forced = rule.forced;
  std::vector<Color> colors = instance.colors();
  for (Vertex u : rule.forced.flipped()) colors[u] = Color::Blue;

  auto& aux = result.aux;
  for (Vertex x : rule.reduced_demand.members()) {
    std::vector<Vertex> reds;
    for (Vertex u : instance.out(x))
      if (colors[u] == Color::Red) reds.push_back(u);
    if (reds.size() != 2)
      fail(ErrorCode::StructureMismatch,
           "vertex " + std::to_string(x) + " left with " + std::to_string(reds.size()) +
               " red out-neighbors after forcing");
    aux.edges.emplace_back(reds[0], reds[1]);
    aux.vertices.push_back(reds[0]);
    aux.vertices.push_back(reds[1]);
  }
  std::sort(aux.edges.begin(), aux.edges.end());
  aux.edges.erase(std::unique(aux.edges.begin(), aux.edges.end()), aux.edges.end());
  std::sort(aux.vertices.begin(), aux.vertices.end());
  aux.vertices.erase(std::unique(aux.vertices.begin(), aux.vertices.end()), aux.vertices.end());

  const int k = static_cast<int>(aux.vertices.size());
  auto index_of = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(aux.vertices.begin(), aux.vertices.end(), v) -
                            aux.vertices.begin());
  };
  std::vector<std::vector<int>> adj(k);
  for (const auto& [a, b] : aux.edges) {
    adj[index_of(a)].push_back(index_of(b));
    adj[index_of(b)].push_back(index_of(a));
  }

  // Two-color; on an outward grid the pair graph is a forest.
  std::vector<int> side(k, -1);
  int components = 0;
  for (int s = 0; s < k; ++s) {
    if (side[s] >= 0) continue;
    ++components;
    side[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int w : adj[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push(w);
        } else if (side[w] == side[v]) {
          fail(ErrorCode::StructureMismatch, "auxiliary pair graph is not bipartite");
        }
      }
    }
  }
  if (static_cast<int>(aux.edges.size()) != k - components)
    fail(ErrorCode::StructureMismatch, "auxiliary pair graph has a cycle");

  // Augmenting-path matching from side 0.
  std::vector<int> mate(k, -1);
  std::vector<int> seen(k, -1);
  std::function<bool(int, int)> augment = [&](int v, int stamp) -> bool {
    for (int w : adj[v]) {
      if (seen[w] == stamp) continue;
      seen[w] = stamp;
      if (mate[w] < 0 || augment(mate[w], stamp)) {
        mate[w] = v;
        mate[v] = w;
        return true;
      }
    }
    return false;
  };
  for (int v = 0; v < k; ++v)
    if (side[v] == 0 && mate[v] < 0 && augment(v, v)) ++result.matching_size;

  // König: Z = vertices reachable from free left vertices by alternating
  // paths; cover = (left \ Z) + (right & Z).
  std::vector<bool> reached(k, false);
  std::queue<int> queue;
  for (int v = 0; v < k; ++v)
    if (side[v] == 0 && mate[v] < 0) {
      reached[v] = true;
      queue.push(v);
    }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int w : adj[v]) {
      if (reached[w] || w == mate[v]) continue;
      reached[w] = true;
      const int next = mate[w];
      if (next >= 0 && !reached[next]) {
        reached[next] = true;
        queue.push(next);
      }
    }
  }
  std::vector<Vertex> cover;
  for (int v = 0; v < k; ++v)
    if ((side[v] == 0) != reached[v]) cover.push_back(aux.vertices[v]);
  result.cover = Recoloring(std::move(cover));
  result.recoloring = result.forced.merged(result.cover);
  return result;
}

Recoloring solve_outward_grid(const Instance& instance, const DemandSet& demand) {
  return analyze_outward_grid(instance, demand).recoloring;
}

Recoloring solve_outward_grid(const Instance& instance) {
  return solve_outward_grid(instance, DemandSet::all(instance.size()));
}

}  // namespace difr
