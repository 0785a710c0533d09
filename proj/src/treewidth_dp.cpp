#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "difr/treewidth.hpp"

namespace difr {

namespace {

// Packs (S, z) over a bag into one integer: vertex i contributes the digit
// s_i * (cap_i + 1) + z_i in base 2 * (cap_i + 1).
class BagCodec {
 public:
  BagCodec(const std::vector<int>& bag, const std::vector<int>& caps) : bag_(bag) {
    std::uint64_t mult = 1;
    for (int v : bag) {
      cap_.push_back(caps[v]);
      mult_.push_back(mult);
      const std::uint64_t radix = 2 * (static_cast<std::uint64_t>(caps[v]) + 1);
      if (mult > (std::uint64_t{1} << 62) / radix)
        fail(ErrorCode::PreconditionViolated, "bag state space too large for treewidth DP");
      mult *= radix;
    }
  }

  int size() const { return static_cast<int>(bag_.size()); }
  int vertex(int i) const { return bag_[i]; }
  int cap(int i) const { return cap_[i]; }
  int position(int v) const {
    return static_cast<int>(std::lower_bound(bag_.begin(), bag_.end(), v) - bag_.begin());
  }

  void decode(std::uint64_t key, std::vector<int>& s, std::vector<int>& z) const {
    s.resize(bag_.size());
    z.resize(bag_.size());
    for (std::size_t i = 0; i < bag_.size(); ++i) {
      const std::uint64_t radix = 2 * (static_cast<std::uint64_t>(cap_[i]) + 1);
      const int digit = static_cast<int>((key / mult_[i]) % radix);
      s[i] = digit / (cap_[i] + 1);
      z[i] = digit % (cap_[i] + 1);
    }
  }
  std::uint64_t encode(const std::vector<int>& s, const std::vector<int>& z) const {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < bag_.size(); ++i)
      key += static_cast<std::uint64_t>(s[i] * (cap_[i] + 1) + z[i]) * mult_[i];
    return key;
  }

 private:
  std::vector<int> bag_, cap_;
  std::vector<std::uint64_t> mult_;
};

struct Entry {
  int cost;
  std::uint64_t left, right;
};
using Table = std::unordered_map<std::uint64_t, Entry>;

void relax(Table& table, std::uint64_t key, int cost, std::uint64_t left, std::uint64_t right = 0) {
  auto [it, inserted] = table.try_emplace(key, Entry{cost, left, right});
  if (!inserted && cost < it->second.cost) it->second = Entry{cost, left, right};
}

}  // namespace

Recoloring solve_by_treewidth(const Instance& instance, const DemandSet& demand,
                              const NiceTreeDecomposition& nice) {
  validate_nice(underlying_graph(instance), nice);
  const int n = instance.size();
  std::vector<int> caps(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (demand.contains(v)) caps[v] = p_deficiency(instance, v);

  std::vector<BagCodec> codecs;
  for (const auto& node : nice.nodes) codecs.emplace_back(node.bag, caps);
  std::vector<Table> tables(nice.nodes.size());
  std::vector<int> s, z, s2, z2;

  for (std::size_t t = 0; t < nice.nodes.size(); ++t) {
    const auto& node = nice.nodes[t];
    const auto& codec = codecs[t];
    auto& table = tables[t];
    switch (node.kind) {
      case NiceKind::Leaf:
        table[0] = Entry{0, 0, 0};
        break;

      case NiceKind::Introduce: {
        const int c = node.children[0];
        const int v = node.vertex;
        const int pv = codec.position(v);
        for (const auto& [key, entry] : tables[c]) {
          codecs[c].decode(key, s2, z2);
          for (int sv = 0; sv <= (instance.is_red(v) ? 1 : 0); ++sv) {
            s = s2;
            z = z2;
            s.insert(s.begin() + pv, sv);
            z.insert(z.begin() + pv, 0);
            // Out-neighbors of v already in V_t all sit in the bag.
            int count = 0;
            for (int j = 0; j < codec.size(); ++j)
              if (j != pv && s[j] && instance.has_edge(v, codec.vertex(j))) ++count;
            z[pv] = std::min(codec.cap(pv), count);
            if (sv)
              for (int j = 0; j < codec.size(); ++j)
                if (j != pv && instance.has_edge(codec.vertex(j), v))
                  z[j] = std::min(codec.cap(j), z[j] + 1);
            relax(table, codec.encode(s, z), entry.cost + sv, key);
          }
        }
        break;
      }

      case NiceKind::Forget: {
        const int c = node.children[0];
        const int pv = codecs[c].position(node.vertex);
        for (const auto& [key, entry] : tables[c]) {
          codecs[c].decode(key, s, z);
          if (z[pv] < codecs[c].cap(pv)) continue;
          s.erase(s.begin() + pv);
          z.erase(z.begin() + pv);
          relax(table, codec.encode(s, z), entry.cost, key);
        }
        break;
      }

      case NiceKind::Join: {
        const int a = node.children[0], b = node.children[1];
        // Group the right child's states by S.
        std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> by_set;
        std::vector<int> zero(codec.size(), 0);
        for (const auto& [key, entry] : tables[b]) {
          codec.decode(key, s, z);
          by_set[codec.encode(s, zero)].push_back(key);
        }
        for (const auto& [key_a, entry_a] : tables[a]) {
          codec.decode(key_a, s, z);
          const auto it = by_set.find(codec.encode(s, zero));
          if (it == by_set.end()) continue;
          int flipped = 0;
          std::vector<int> local(codec.size(), 0);
          for (int i = 0; i < codec.size(); ++i) {
            flipped += s[i];
            for (int j = 0; j < codec.size(); ++j)
              if (s[j] && instance.has_edge(codec.vertex(i), codec.vertex(j))) ++local[i];
          }
          for (std::uint64_t key_b : it->second) {
            codec.decode(key_b, s2, z2);
            std::vector<int> merged(codec.size());
            for (int i = 0; i < codec.size(); ++i) {
              const int cap = codec.cap(i);
              merged[i] = std::min(cap, z[i] + z2[i] - std::min(cap, local[i]));
            }
            relax(table, codec.encode(s, merged),
                  entry_a.cost + tables[b].at(key_b).cost - flipped, key_a, key_b);
          }
        }
        break;
      }
    }
    // Children tables are still needed for reconstruction.
  }

  const auto& root_table = tables[nice.root()];
  if (root_table.find(0) == root_table.end())
    fail(ErrorCode::Infeasible, "no recoloring clears the demanded vertices");

  std::vector<Vertex> flips;
  std::vector<std::pair<int, std::uint64_t>> pending{{nice.root(), 0}};
  while (!pending.empty()) {
    const auto [t, key] = pending.back();
    pending.pop_back();
    const auto& node = nice.nodes[t];
    const auto& entry = tables[t].at(key);
    switch (node.kind) {
      case NiceKind::Leaf:
        break;
      case NiceKind::Introduce:
        pending.emplace_back(node.children[0], entry.left);
        break;
      case NiceKind::Forget: {
        const int c = node.children[0];
        codecs[c].decode(entry.left, s, z);
        if (s[codecs[c].position(node.vertex)]) flips.push_back(node.vertex);
        pending.emplace_back(c, entry.left);
        break;
      }
      case NiceKind::Join:
        pending.emplace_back(node.children[0], entry.left);
        pending.emplace_back(node.children[1], entry.right);
        break;
    }
  }
  Recoloring result(std::move(flips));
  if (result.size() != root_table.at(0).cost || !verify(instance, result, demand).valid)
    fail(ErrorCode::Infeasible, "treewidth DP internal error: reconstruction mismatch");
  return result;
}

Recoloring solve_by_treewidth(const Instance& instance, const DemandSet& demand) {
  const auto td = heuristic_decomposition(underlying_graph(instance));
  const int root = td.bags.empty() ? 0 : static_cast<int>(td.bags.size()) - 1;
  return solve_by_treewidth(instance, demand, make_nice(td, root));
}

Recoloring solve_by_treewidth(const Instance& instance) {
  return solve_by_treewidth(instance, DemandSet::all(instance.size()));
}

OuterplanarResult solve_outerplanar(const Instance& instance, std::span<const int> layers,
                                    const DemandSet& demand) {
  if (static_cast<int>(layers.size()) != instance.size())
    fail(ErrorCode::InvalidInput, "layer data must cover every vertex");
  OuterplanarResult result;
  for (int layer : layers) result.lambda = std::max(result.lambda, layer + 1);
  result.width_bound = 3 * result.lambda - 1;
  const auto td = heuristic_decomposition(underlying_graph(instance));
  result.width = td.width();
  const int root = td.bags.empty() ? 0 : static_cast<int>(td.bags.size()) - 1;
  result.recoloring = solve_by_treewidth(instance, demand, make_nice(td, root));
  return result;
}

}  // namespace difr
