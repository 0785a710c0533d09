#include "difr/rules.hpp"

namespace difr {

ForcedFlips rule_single_red_outneighbor(const Instance& instance, const DemandSet& demand) {
  const int n = instance.size();
  const Ratio p = instance.p();
  std::vector<Color> colors = instance.colors();
  std::vector<Vertex> forced;

  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!demand.contains(v)) continue;
      const auto outs = instance.out(v);
      int blue = 0;
      int red = 0;
      for (Vertex u : outs) (colors[u] == Color::Red ? red : blue)++;
      const auto need = p.ceil_times(static_cast<std::int64_t>(outs.size())) - blue;
      if (need <= 0 || need != red) continue;
      for (Vertex u : outs) {
        if (colors[u] != Color::Red) continue;
        colors[u] = Color::Blue;
        forced.push_back(u);
      }
      changed = true;
    }
  }

  ForcedFlips result{Recoloring(std::move(forced)), DemandSet::none(n)};
  const Instance reduced = instance.with_colors(std::move(colors));
  result.reduced_demand = DemandSet::of(n, illusion_set(reduced, demand));
  return result;
}

ForcedFlips rule_single_red_outneighbor(const Instance& instance) {
  return rule_single_red_outneighbor(instance, DemandSet::all(instance.size()));
}

Recoloring high_p_bounded_outdegree_solve(const Instance& instance, const DemandSet& demand) {
  if (instance.max_out_degree() > 2 || !instance.p().above_half())
    fail(ErrorCode::PreconditionViolated,
         "high-p rule needs max out-degree <= 2 and p > 1/2");
  std::vector<Vertex> flips;
  for (Vertex v = 0; v < instance.size(); ++v) {
    if (!demand.contains(v)) continue;
    for (Vertex u : instance.out(v))
      if (instance.is_red(u)) flips.push_back(u);
  }
  return Recoloring(std::move(flips));
}

Recoloring high_p_bounded_outdegree_solve(const Instance& instance) {
  return high_p_bounded_outdegree_solve(instance, DemandSet::all(instance.size()));
}

bool is_half_equivalent(const Instance& instance) {
  return instance.max_out_degree() <= 2 && !instance.p().is_zero() && instance.p() <= kHalf;
}

}  // namespace difr
