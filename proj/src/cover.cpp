#include "difr/cover.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <sstream>

namespace difr {

CoverModel build_cover_model(const Instance& instance, const DemandSet& demand) {
  CoverModel model;
  for (Vertex v : illusion_set(instance, demand)) {
    CoverConstraint row;
    row.source = v;
    row.demand = p_deficiency(instance, v);
    for (Vertex u : instance.out(v))
      if (instance.is_red(u)) row.members.push_back(u);
    model.elements.insert(model.elements.end(), row.members.begin(), row.members.end());
    model.constraints.push_back(std::move(row));
  }
  std::sort(model.elements.begin(), model.elements.end());
  model.elements.erase(std::unique(model.elements.begin(), model.elements.end()),
                       model.elements.end());
  return model;
}

CoverModel build_cover_model(const Instance& instance) {
  return build_cover_model(instance, DemandSet::all(instance.size()));
}

namespace {

// Greedy disjoint packing: rows whose available sets are pairwise disjoint
// need separate picks, so their residual demands add up.
int packing_bound(const std::vector<std::vector<int>>& avail, const std::vector<int>& residual,
                  int element_count) {
  const int rows = static_cast<int>(avail.size());
  std::vector<std::vector<int>> holders(element_count);
  for (int r = 0; r < rows; ++r)
    for (int e : avail[r]) holders[e].push_back(r);
  std::vector<bool> alive(rows, true);
  int bound = 0;
  for (;;) {
    int pick = -1, pick_degree = INT_MAX;
    for (int r = 0; r < rows; ++r) {
      if (!alive[r]) continue;
      int degree = 0;
      for (int e : avail[r])
        for (int s : holders[e])
          if (alive[s] && s != r) ++degree;
      if (degree < pick_degree || (degree == pick_degree && residual[r] > residual[pick])) {
        pick_degree = degree;
        pick = r;
      }
    }
    if (pick < 0) break;
    bound += residual[pick];
    for (int e : avail[pick])
      for (int s : holders[e]) alive[s] = false;
  }
  return bound;
}

// One connected block of the model, with elements renumbered 0..E-1.
class BlockSolver {
 public:
  BlockSolver(int elements, std::vector<std::vector<int>> rows, std::vector<int> demand)
      : E_(elements), rows_(std::move(rows)), demand_(std::move(demand)), rows_of_(elements) {
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
      for (int e : rows_[r]) rows_of_[e].push_back(r);
  }

  std::vector<int> greedy() const {
    std::vector<int> residual = demand_;
    std::vector<bool> chosen(E_, false);
    std::vector<int> picked;
    for (;;) {
      int best = -1, best_gain = 0;
      for (int e = 0; e < E_; ++e) {
        if (chosen[e]) continue;
        int gain = 0;
        for (int r : rows_of_[e])
          if (residual[r] > 0) ++gain;
        if (gain > best_gain) {
          best_gain = gain;
          best = e;
        }
      }
      if (best < 0) break;
      chosen[best] = true;
      picked.push_back(best);
      for (int r : rows_of_[best]) --residual[r];
    }
    std::sort(picked.begin(), picked.end());
    return picked;
  }

  std::vector<int> solve() {
    const auto upper = greedy();
    best_ = static_cast<int>(upper.size());
    residual_ = demand_;
    chosen_.assign(E_, false);
    banned_.assign(E_, false);
    branch_and_bound(0);
    return lexicographic(best_);
  }

 private:
  void branch_and_bound(int count) {
    if (count >= best_) return;
    std::vector<int> open;
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
      if (residual_[r] > 0) open.push_back(r);
    if (open.empty()) {
      best_ = count;
      return;
    }
    std::vector<std::vector<int>> avail(open.size());
    std::vector<int> residual(open.size());
    std::size_t branch = 0;
    int best_slack = INT_MAX;
    for (std::size_t i = 0; i < open.size(); ++i) {
      for (int e : rows_[open[i]])
        if (!chosen_[e] && !banned_[e]) avail[i].push_back(e);
      residual[i] = residual_[open[i]];
      const int slack = static_cast<int>(avail[i].size()) - residual[i];
      if (slack < 0) return;
      if (slack < best_slack) {
        best_slack = slack;
        branch = i;
      }
    }
    if (count + packing_bound(avail, residual, E_) >= best_) return;

    const auto options = avail[branch];
    std::vector<int> banned_here;
    for (int e : options) {
      chosen_[e] = true;
      for (int r : rows_of_[e]) --residual_[r];
      branch_and_bound(count + 1);
      for (int r : rows_of_[e]) ++residual_[r];
      chosen_[e] = false;
      banned_[e] = true;
      banned_here.push_back(e);
    }
    for (int e : banned_here) banned_[e] = false;
  }

  // Include-first sweep in ascending element order under a fixed budget:
  // the first solution found is the lexicographically smallest one.
  std::vector<int> lexicographic(int budget) {
    residual_ = demand_;
    std::vector<int> picked;
    std::function<bool(int, int)> sweep = [&](int i, int left) -> bool {
      std::vector<int> open;
      for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
        if (residual_[r] > 0) open.push_back(r);
      if (open.empty()) return true;
      if (i == E_ || left == 0) return false;
      std::vector<std::vector<int>> avail(open.size());
      std::vector<int> residual(open.size());
      for (std::size_t k = 0; k < open.size(); ++k) {
        for (int e : rows_[open[k]])
          if (e >= i) avail[k].push_back(e);
        residual[k] = residual_[open[k]];
        if (static_cast<int>(avail[k].size()) < residual[k]) return false;
      }
      if (packing_bound(avail, residual, E_) > left) return false;

      const bool useful = std::any_of(rows_of_[i].begin(), rows_of_[i].end(),
                                      [&](int r) { return residual_[r] > 0; });
      if (useful) {
        picked.push_back(i);
        for (int r : rows_of_[i]) --residual_[r];
        const bool ok = sweep(i + 1, left - 1);
        for (int r : rows_of_[i]) ++residual_[r];
        if (ok) return true;
        picked.pop_back();
      }
      return sweep(i + 1, left);
    };
    if (!sweep(0, budget))
      fail(ErrorCode::Infeasible, "cover solver internal error: optimum not reproducible");
    return picked;
  }

  int E_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> demand_;
  std::vector<std::vector<int>> rows_of_;
  int best_ = 0;
  std::vector<int> residual_;
  std::vector<bool> chosen_, banned_;
};

struct Block {
  std::vector<Vertex> elements;
  BlockSolver solver;
};

std::vector<Block> split_blocks(const CoverModel& model) {
  const int E = static_cast<int>(model.elements.size());
  auto index_of = [&](Vertex v) {
    const auto it = std::lower_bound(model.elements.begin(), model.elements.end(), v);
    if (it == model.elements.end() || *it != v)
      fail(ErrorCode::PreconditionViolated,
           "constraint member " + std::to_string(v) + " is not a model element");
    return static_cast<int>(it - model.elements.begin());
  };

  std::vector<int> parent(E);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<std::vector<int>> rows;
  for (const auto& c : model.constraints) {
    if (c.demand < 1 || c.demand > static_cast<int>(c.members.size()))
      fail(ErrorCode::PreconditionViolated, "constraint of vertex " + std::to_string(c.source) +
                                                " has demand outside [1, |members|]");
    std::vector<int> row;
    for (Vertex v : c.members) row.push_back(index_of(v));
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    for (int e : row) parent[find(e)] = find(row.front());
    rows.push_back(std::move(row));
  }

  std::vector<int> block_of(E, -1);
  std::vector<std::vector<int>> members;  // global element indices per block
  for (int e = 0; e < E; ++e) {
    const int root = find(e);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(members.size());
      members.emplace_back();
    }
    members[block_of[root]].push_back(e);
  }
  std::vector<std::vector<std::vector<int>>> block_rows(members.size());
  std::vector<std::vector<int>> block_demand(members.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int b = block_of[find(rows[r].front())];
    std::vector<int> local;
    for (int e : rows[r])
      local.push_back(static_cast<int>(
          std::lower_bound(members[b].begin(), members[b].end(), e) - members[b].begin()));
    block_rows[b].push_back(std::move(local));
    block_demand[b].push_back(model.constraints[r].demand);
  }

  std::vector<Block> blocks;
  for (std::size_t b = 0; b < members.size(); ++b) {
    std::vector<Vertex> ids;
    for (int e : members[b]) ids.push_back(model.elements[e]);
    blocks.push_back(Block{std::move(ids),
                           BlockSolver(static_cast<int>(members[b].size()), std::move(block_rows[b]),
                                       std::move(block_demand[b]))});
  }
  return blocks;
}

}  // namespace

std::vector<Vertex> solve_cover_exact(const CoverModel& model) {
  std::vector<Vertex> result;
  for (auto& block : split_blocks(model))
    for (int e : block.solver.solve()) result.push_back(block.elements[e]);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Vertex> solve_cover_greedy(const CoverModel& model) {
  std::vector<Vertex> result;
  for (auto& block : split_blocks(model))
    for (int e : block.solver.greedy()) result.push_back(block.elements[e]);
  std::sort(result.begin(), result.end());
  return result;
}

Recoloring solve_by_cover(const Instance& instance, const DemandSet& demand) {
  return Recoloring(solve_cover_exact(build_cover_model(instance, demand)));
}

Recoloring solve_by_cover(const Instance& instance) {
  return solve_by_cover(instance, DemandSet::all(instance.size()));
}

UndirectedGraph primal_graph(const CoverModel& model) {
  UndirectedGraph g(static_cast<int>(model.elements.size()));
  auto index_of = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(model.elements.begin(), model.elements.end(), v) -
                            model.elements.begin());
  };
  for (const auto& c : model.constraints)
    for (std::size_t i = 0; i < c.members.size(); ++i)
      for (std::size_t j = i + 1; j < c.members.size(); ++j)
        g.add_edge(index_of(c.members[i]), index_of(c.members[j]));
  return g;
}

UndirectedGraph dual_graph(const CoverModel& model) {
  const int m = static_cast<int>(model.constraints.size());
  UndirectedGraph g(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const auto& x = model.constraints[a].members;
      const auto& y = model.constraints[b].members;
      std::size_t i = 0, j = 0;
      while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) {
          g.add_edge(a, b);
          break;
        }
        x[i] < y[j] ? ++i : ++j;
      }
    }
  return g;
}

int treedepth_upper_bound(const UndirectedGraph& graph) {
  // A DFS tree has no cross edges, so it is an elimination forest.
  std::vector<int> depth(graph.n, 0);
  int height = 0;
  for (int root = 0; root < graph.n; ++root) {
    if (depth[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    depth[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      height = std::max(height, depth[v]);
      if (next == graph.adj[v].size()) {
        stack.pop_back();
        continue;
      }
      const int w = graph.adj[v][next++];
      if (!depth[w]) {
        depth[w] = depth[v] + 1;
        stack.push_back({w, 0});
      }
    }
  }
  return height;
}

std::string export_lp(const CoverModel& model) {
  std::ostringstream out;
  out << "\\ minimum recoloring as set multicover\n";
  out << "Minimize\n obj:";
  if (model.elements.empty()) out << " 0 x_empty";
  for (std::size_t i = 0; i < model.elements.size(); ++i)
    out << (i ? " + " : " ") << 'x' << model.elements[i];
  out << "\nSubject To\n";
  for (const auto& c : model.constraints) {
    out << " c" << c.source << ':';
    for (std::size_t i = 0; i < c.members.size(); ++i)
      out << (i ? " + " : " ") << 'x' << c.members[i];
    out << " >= " << c.demand << '\n';
  }
  out << "Binary\n";
  for (Vertex v : model.elements) out << " x" << v << '\n';
  if (model.elements.empty()) out << " x_empty\n";
  out << "End\n";
  return out.str();
}

}  // namespace difr
