#include <algorithm>

#include "difr/rules.hpp"
#include "difr/structured.hpp"

namespace difr {

int TreeDPTable::cost(Vertex u, int flag, int z) const {
  const auto& table = stages.at(u).back().cost;
  const int width = cap[u] + 1;
  if (flag < 0 || flag > 1 || z < 0 || z >= width) return kTreeDPInf;
  return table[flag * width + z];
}

TreeDPTable build_tree_dp(const Instance& instance, const DemandSet& demand) {
  if (!is_underlying_forest(instance))
    fail(ErrorCode::StructureMismatch, "underlying graph is not a forest");
  const int n = instance.size();
  const auto g = underlying_graph(instance);

  TreeDPTable dp;
  dp.parent.assign(n, -1);
  dp.cap.assign(n, 0);
  dp.stages.assign(n, {});
  for (Vertex v = 0; v < n; ++v)
    if (demand.contains(v)) dp.cap[v] = p_deficiency(instance, v);

  // Root each component at its smallest id; children before parents.
  std::vector<Vertex> order;
  std::vector<bool> seen(n, false);
  for (Vertex r = 0; r < n; ++r) {
    if (seen[r]) continue;
    dp.roots.push_back(r);
    seen[r] = true;
    std::vector<Vertex> stack{r};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : g.adj[v])
        if (!seen[w]) {
          seen[w] = true;
          dp.parent[w] = v;
          stack.push_back(w);
        }
    }
  }
  std::reverse(order.begin(), order.end());

  // Best child cost subject to a lower bound on the child's own count.
  auto child_best = [&](Vertex c, int min_z, int& best_flag, int& best_z) {
    int best = kTreeDPInf;
    for (int f = 0; f <= 1; ++f)
      for (int z = std::max(0, min_z); z <= dp.cap[c]; ++z) {
        const int value = dp.cost(c, f, z);
        if (value < best) {
          best = value;
          best_flag = f;
          best_z = z;
        }
      }
    return best;
  };

  for (Vertex u : order) {
    const int width = dp.cap[u] + 1;
    auto& stages = dp.stages[u];
    TreeDPStage base;
    base.cost.assign(2 * width, kTreeDPInf);
    base.cost[0] = 0;
    if (instance.is_red(u)) base.cost[width] = 1;
    stages.push_back(std::move(base));

    for (int c : g.adj[u]) {
      if (c == dp.parent[u]) continue;
      const auto& prev = stages.back().cost;
      TreeDPStage stage;
      stage.child = c;
      stage.child_is_out = instance.has_edge(u, c);
      stage.cost.assign(2 * width, kTreeDPInf);
      stage.prev_z.assign(2 * width, -1);
      stage.child_flag.assign(2 * width, -1);
      stage.child_z.assign(2 * width, -1);

      for (int f = 0; f <= 1; ++f)
        for (int z = 0; z < width; ++z) {
          const int before = prev[f * width + z];
          if (before >= kTreeDPInf) continue;
          if (!stage.child_is_out) {
            // c -> u: u's flip counts toward c's requirement.
            int cf = -1, cz = -1;
            const int add = child_best(c, dp.cap[c] - f, cf, cz);
            if (add >= kTreeDPInf) continue;
            const int idx = f * width + z;
            if (before + add < stage.cost[idx]) {
              stage.cost[idx] = before + add;
              stage.prev_z[idx] = z;
              stage.child_flag[idx] = cf;
              stage.child_z[idx] = cz;
            }
          } else {
            // u -> c: a flipped c counts toward u.
            for (int cf = 0; cf <= 1; ++cf)
              for (int cz = dp.cap[c]; cz <= dp.cap[c]; ++cz) {
                const int add = dp.cost(c, cf, cz);
                if (add >= kTreeDPInf) continue;
                const int idx = f * width + std::min(width - 1, z + cf);
                if (before + add < stage.cost[idx]) {
                  stage.cost[idx] = before + add;
                  stage.prev_z[idx] = z;
                  stage.child_flag[idx] = cf;
                  stage.child_z[idx] = cz;
                }
              }
          }
        }
      stages.push_back(std::move(stage));
    }
  }
  return dp;
}

Recoloring solve_directed_tree(const Instance& instance, const DemandSet& demand) {
  if (!is_underlying_forest(instance))
    fail(ErrorCode::StructureMismatch, "underlying graph is not a forest");
  // Flips forced by the single-red rule are in every optimum; the DP only
  // has to clear what they leave behind.
  const auto rule = rule_single_red_outneighbor(instance, demand);
  std::vector<Color> colors = instance.colors();
  for (Vertex u : rule.forced.flipped()) colors[u] = Color::Blue;
  const Instance reduced = instance.with_colors(std::move(colors));
  const auto dp = build_tree_dp(reduced, rule.reduced_demand);

  std::vector<Vertex> flips;
  std::vector<std::tuple<Vertex, int, int>> pending;
  for (Vertex r : dp.roots) {
    int best = kTreeDPInf, bf = 0;
    for (int f = 0; f <= 1; ++f)
      if (dp.cost(r, f, dp.cap[r]) < best) {
        best = dp.cost(r, f, dp.cap[r]);
        bf = f;
      }
    if (best >= kTreeDPInf)
      fail(ErrorCode::Infeasible, "vertex " + std::to_string(r) + " cannot be cleared");
    pending.emplace_back(r, bf, dp.cap[r]);
  }
  while (!pending.empty()) {
    auto [u, f, z] = pending.back();
    pending.pop_back();
    if (f) flips.push_back(u);
    const auto& stages = dp.stages[u];
    const int width = dp.cap[u] + 1;
    for (std::size_t s = stages.size() - 1; s > 0; --s) {
      const int idx = f * width + z;
      const auto& stage = stages[s];
      pending.emplace_back(stage.child, stage.child_flag[idx], stage.child_z[idx]);
      z = stage.prev_z[idx];
    }
  }
  return rule.forced.merged(Recoloring(std::move(flips)));
}

Recoloring solve_directed_tree(const Instance& instance) {
  return solve_directed_tree(instance, DemandSet::all(instance.size()));
}

}  // namespace difr
