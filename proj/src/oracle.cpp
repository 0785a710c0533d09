#include "difr/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace difr {

namespace {

// Candidate reds: the only vertices a minimum recoloring can contain.
std::vector<Vertex> candidate_reds(const Instance& instance, const DemandSet& demand) {
  std::vector<bool> mark(instance.size(), false);
  for (Vertex v : illusion_set(instance, demand))
    for (Vertex u : instance.out(v))
      if (instance.is_red(u)) mark[u] = true;
  std::vector<Vertex> result;
  for (Vertex v = 0; v < instance.size(); ++v)
    if (mark[v]) result.push_back(v);
  return result;
}

}  // namespace

std::optional<Recoloring> brute_force_min_recoloring(const Instance& instance,
                                                     const DemandSet& demand,
                                                     OracleOptions options) {
  const auto candidates = candidate_reds(instance, demand);
  const int m = static_cast<int>(candidates.size());
  if (m > options.max_candidates)
    fail(ErrorCode::PreconditionViolated,
         "oracle guard: " + std::to_string(m) + " candidate reds exceed limit " +
             std::to_string(options.max_candidates));

  std::vector<int> need(instance.size(), 0);
  std::vector<Vertex> violated = illusion_set(instance, demand);
  for (Vertex v : violated) need[v] = p_deficiency(instance, v);
  int unsatisfied = static_cast<int>(violated.size());

  std::vector<Vertex> chosen;
  auto max_need = [&] {
    int best = 0;
    for (Vertex v : violated) best = std::max(best, need[v]);
    return best;
  };
  auto flip = [&](Vertex u, int delta) {
    // need[] goes negative for over-covered vertices; only need > 0 counts.
    for (Vertex v : instance.in(u)) {
      if (!demand.contains(v)) continue;
      const bool was_satisfied = need[v] <= 0;
      need[v] += delta;
      const bool now_satisfied = need[v] <= 0;
      if (was_satisfied != now_satisfied) unsatisfied += now_satisfied ? -1 : 1;
    }
  };

  std::function<bool(int, int)> choose = [&](int start, int remaining) -> bool {
    if (unsatisfied == 0) return remaining == 0;
    if (remaining == 0 || m - start < remaining) return false;
    if (max_need() > remaining) return false;
    for (int i = start; i <= m - remaining; ++i) {
      chosen.push_back(candidates[i]);
      flip(candidates[i], -1);
      if (choose(i + 1, remaining - 1)) return true;
      flip(candidates[i], +1);
      chosen.pop_back();
    }
    return false;
  };

  const int limit = std::min(options.size_cap, m);
  for (int k = 0; k <= limit; ++k) {
    if (unsatisfied == 0 && k == 0) return Recoloring{};
    if (choose(0, k)) {
      Recoloring result(chosen);
      if (!verify(instance, result, demand).valid)
        fail(ErrorCode::Infeasible, "oracle internal error: incremental count disagrees with verify");
      return result;
    }
  }
  return std::nullopt;
}

std::optional<Recoloring> brute_force_min_recoloring(const Instance& instance,
                                                     OracleOptions options) {
  return brute_force_min_recoloring(instance, DemandSet::all(instance.size()), options);
}

std::optional<Recoloring> brute_force_within_budget(const Instance& instance,
                                                    const DemandSet& demand, int budget) {
  const int n = instance.size();
  std::vector<int> need(n, 0);
  for (Vertex v : illusion_set(instance, demand)) need[v] = p_deficiency(instance, v);
  std::vector<bool> flipped(n, false), excluded(n, false);
  std::vector<Vertex> chosen;

  auto available = [&](Vertex v) {
    std::vector<Vertex> reds;
    for (Vertex u : instance.out(v))
      if (instance.is_red(u) && !flipped[u] && !excluded[u]) reds.push_back(u);
    return reds;
  };

  std::function<bool(int)> search = [&](int left) -> bool {
    std::vector<Vertex> open;
    for (Vertex v = 0; v < n; ++v)
      if (need[v] > 0) open.push_back(v);
    if (open.empty()) return true;
    if (left == 0) return false;

    std::vector<std::vector<Vertex>> avail(open.size());
    std::size_t branch = 0;
    int best_slack = INT_MAX;
    for (std::size_t i = 0; i < open.size(); ++i) {
      avail[i] = available(open[i]);
      const int slack = static_cast<int>(avail[i].size()) - need[open[i]];
      if (slack < 0 || need[open[i]] > left) return false;
      if (slack < best_slack) {
        best_slack = slack;
        branch = i;
      }
    }

    // Packing bound: pairwise disjoint available sets need separate flips.
    std::vector<std::vector<int>> holders(n);
    for (std::size_t i = 0; i < open.size(); ++i)
      for (Vertex u : avail[i]) holders[u].push_back(static_cast<int>(i));
    std::vector<bool> alive(open.size(), true);
    int bound = 0;
    for (;;) {
      int pick = -1, pick_degree = INT_MAX;
      for (std::size_t i = 0; i < open.size(); ++i) {
        if (!alive[i]) continue;
        int degree = 0;
        for (Vertex u : avail[i])
          for (int j : holders[u])
            if (alive[j] && j != static_cast<int>(i)) ++degree;
        if (degree < pick_degree) {
          pick_degree = degree;
          pick = static_cast<int>(i);
        }
      }
      if (pick < 0) break;
      bound += need[open[pick]];
      for (Vertex u : avail[pick])
        for (int j : holders[u]) alive[j] = false;
    }
    if (bound > left) return false;

    const auto options = avail[branch];
    std::vector<Vertex> newly_excluded;
    bool found = false;
    for (Vertex u : options) {
      flipped[u] = true;
      chosen.push_back(u);
      for (Vertex v : instance.in(u)) --need[v];
      found = search(left - 1);
      for (Vertex v : instance.in(u)) ++need[v];
      if (found) break;
      chosen.pop_back();
      flipped[u] = false;
      excluded[u] = true;
      newly_excluded.push_back(u);
    }
    for (Vertex u : newly_excluded) excluded[u] = false;
    return found;
  };

  // need[] is only tracked for demanded vertices; in-neighbors outside the
  // demand start at 0 and go negative, which never reads as "open".
  if (!search(budget)) return std::nullopt;
  Recoloring result(chosen);
  if (!verify(instance, result, demand).valid)
    fail(ErrorCode::Infeasible, "bounded search internal error: result does not verify");
  return result;
}

std::optional<std::vector<int>> brute_force_hitting_set(int universe_size,
                                                        const std::vector<std::vector<int>>& family,
                                                        int size_cap) {
  if (universe_size < 0 || universe_size > 20)
    fail(ErrorCode::PreconditionViolated, "hitting set oracle requires |U| <= 20");
  std::vector<std::uint32_t> masks;
  for (const auto& set : family) {
    std::uint32_t mask = 0;
    for (int u : set) {
      if (u < 0 || u >= universe_size)
        fail(ErrorCode::InvalidInput, "set element " + std::to_string(u) + " outside universe");
      mask |= 1u << u;
    }
    masks.push_back(mask);
  }
  std::vector<int> chosen;
  std::function<bool(int, int, std::uint32_t)> choose = [&](int start, int remaining,
                                                             std::uint32_t picked) -> bool {
    if (remaining == 0)
      return std::all_of(masks.begin(), masks.end(),
                         [&](std::uint32_t m) { return (m & picked) != 0; });
    for (int u = start; u <= universe_size - remaining; ++u) {
      chosen.push_back(u);
      if (choose(u + 1, remaining - 1, picked | (1u << u))) return true;
      chosen.pop_back();
    }
    return false;
  };
  const int limit = std::min(size_cap, universe_size);
  for (int k = 0; k <= limit; ++k)
    if (choose(0, k, 0)) return chosen;
  return std::nullopt;
}

}  // namespace difr
