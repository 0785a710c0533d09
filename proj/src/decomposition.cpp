#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "difr/treewidth.hpp"

namespace difr {

int TreeDecomposition::width() const {
  int largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, static_cast<int>(bag.size()));
  return largest - 1;
}

int NiceTreeDecomposition::width() const {
  int largest = 0;
  for (const auto& node : nodes) largest = std::max(largest, static_cast<int>(node.bag.size()));
  return largest - 1;
}

TreeDecomposition heuristic_decomposition(const UndirectedGraph& graph) {
  const int n = graph.n;
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v].insert(graph.adj[v].begin(), graph.adj[v].end());

  auto fill_of = [&](int v) {
    long missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
      for (auto b = std::next(a); b != adj[v].end(); ++b)
        if (!adj[*a].count(*b)) ++missing;
    return missing;
  };

  std::vector<long> fill(n);
  std::vector<bool> dirty(n, true), eliminated(n, false);
  std::vector<int> position(n, -1);
  std::vector<int> order;
  std::vector<std::vector<int>> bag_of(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      if (dirty[v]) {
        fill[v] = fill_of(v);
        dirty[v] = false;
      }
      if (pick < 0 || fill[v] < fill[pick] ||
          (fill[v] == fill[pick] && adj[v].size() < adj[pick].size()))
        pick = v;
    }
    const std::vector<int> nbrs(adj[pick].begin(), adj[pick].end());
    bag_of[pick] = nbrs;
    bag_of[pick].push_back(pick);
    std::sort(bag_of[pick].begin(), bag_of[pick].end());
    for (int a : nbrs) {
      adj[a].erase(pick);
      for (int b : nbrs)
        if (a != b) adj[a].insert(b);
    }
    for (int a : nbrs) {
      dirty[a] = true;
      for (int b : adj[a]) dirty[b] = true;
    }
    adj[pick].clear();
    eliminated[pick] = true;
    position[pick] = step;
    order.push_back(pick);
  }

  // Bag i belongs to the i-th eliminated vertex and hangs off the bag of its
  // earliest-eliminated remaining neighbor.
  TreeDecomposition td;
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    td.bags.push_back(bag_of[v]);
    int next = -1;
    for (int u : bag_of[v])
      if (u != v && (next < 0 || position[u] < next)) next = position[u];
    if (next < 0)
      roots.push_back(i);
    else
      td.edges.emplace_back(i, next);
  }
  for (std::size_t r = 1; r < roots.size(); ++r) td.edges.emplace_back(roots[r - 1], roots[r]);
  validate_decomposition(graph, td);
  return td;
}

void validate_decomposition(const UndirectedGraph& graph, const TreeDecomposition& td) {
  const int b = static_cast<int>(td.bags.size());
  auto bad = [](const std::string& why) { fail(ErrorCode::InvalidInput, "tree decomposition: " + why); };
  if (b == 0) {
    if (graph.n > 0) bad("no bags");
    return;
  }
  if (static_cast<int>(td.edges.size()) != b - 1) bad("tree must have bags - 1 edges");

  std::vector<int> parent(b);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<std::vector<int>> tree(b);
  for (const auto& [x, y] : td.edges) {
    if (x < 0 || y < 0 || x >= b || y >= b) bad("edge references unknown bag");
    if (find(x) == find(y)) bad("bag graph has a cycle");
    parent[find(x)] = find(y);
    tree[x].push_back(y);
    tree[y].push_back(x);
  }

  std::vector<std::vector<int>> holders(graph.n);
  for (int i = 0; i < b; ++i)
    for (int v : td.bags[i]) {
      if (v < 0 || v >= graph.n) bad("bag " + std::to_string(i) + " has unknown vertex");
      holders[v].push_back(i);
    }
  for (int v = 0; v < graph.n; ++v) {
    if (holders[v].empty()) bad("vertex " + std::to_string(v) + " in no bag");
    // Bags holding v must be connected: count tree edges inside the set.
    std::vector<bool> in(b, false);
    for (int i : holders[v]) in[i] = true;
    int inner = 0;
    for (const auto& [x, y] : td.edges) inner += in[x] && in[y];
    if (inner != static_cast<int>(holders[v].size()) - 1)
      bad("bags holding vertex " + std::to_string(v) + " are not connected");
  }
  for (int v = 0; v < graph.n; ++v)
    for (int w : graph.adj[v]) {
      if (w < v) continue;
      bool covered = false;
      for (int i : holders[v])
        if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), w)) covered = true;
      if (!covered) bad("edge {" + std::to_string(v) + "," + std::to_string(w) + "} in no bag");
    }
}

NiceTreeDecomposition make_nice(const TreeDecomposition& td, int root) {
  NiceTreeDecomposition nice;
  auto add = [&](NiceKind kind, std::vector<int> bag, int vertex, std::vector<int> children) {
    nice.nodes.push_back({kind, std::move(bag), vertex, std::move(children)});
    return static_cast<int>(nice.nodes.size()) - 1;
  };
  if (td.bags.empty()) {
    add(NiceKind::Leaf, {}, -1, {});
    return nice;
  }
  if (root < 0 || root >= static_cast<int>(td.bags.size()))
    fail(ErrorCode::InvalidInput, "decomposition root out of range");
  std::vector<std::vector<int>> tree(td.bags.size());
  for (const auto& [x, y] : td.edges) {
    tree[x].push_back(y);
    tree[y].push_back(x);
  }
  for (const auto& bag : td.bags)
    if (!std::is_sorted(bag.begin(), bag.end()))
      fail(ErrorCode::InvalidInput, "decomposition bags must be sorted");

  // Turn the top of a chain whose bag is `from` into bag `to`.
  auto morph = [&](int top, std::vector<int> from, const std::vector<int>& to) {
    for (int v : std::vector<int>(from))
      if (!std::binary_search(to.begin(), to.end(), v)) {
        from.erase(std::find(from.begin(), from.end(), v));
        top = add(NiceKind::Forget, from, v, {top});
      }
    for (int v : to)
      if (!std::binary_search(from.begin(), from.end(), v)) {
        from.insert(std::lower_bound(from.begin(), from.end(), v), v);
        top = add(NiceKind::Introduce, from, v, {top});
      }
    return top;
  };

  std::vector<bool> visited(td.bags.size(), false);
  std::function<int(int, int)> build = [&](int t, int from) -> int {
    if (visited[t]) fail(ErrorCode::InvalidInput, "decomposition tree has a cycle");
    visited[t] = true;
    std::vector<int> tops;
    for (int c : tree[t])
      if (c != from) tops.push_back(morph(build(c, t), td.bags[c], td.bags[t]));
    if (tops.empty()) return morph(add(NiceKind::Leaf, {}, -1, {}), {}, td.bags[t]);
    int top = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i)
      top = add(NiceKind::Join, td.bags[t], -1, {top, tops[i]});
    return top;
  };
  const int top = build(root, -1);
  if (std::find(visited.begin(), visited.end(), false) != visited.end())
    fail(ErrorCode::InvalidInput, "decomposition tree is disconnected");
  morph(top, td.bags[root], {});
  return nice;
}

void validate_nice(const UndirectedGraph& graph, const NiceTreeDecomposition& nice) {
  auto bad = [](const std::string& why) { fail(ErrorCode::InvalidInput, "nice decomposition: " + why); };
  if (nice.nodes.empty()) bad("no nodes");
  if (!nice.nodes.back().bag.empty()) bad("root bag not empty");
  TreeDecomposition td;
  std::vector<int> parents(nice.nodes.size(), 0);
  for (int i = 0; i < static_cast<int>(nice.nodes.size()); ++i) {
    const auto& node = nice.nodes[i];
    td.bags.push_back(node.bag);
    if (!std::is_sorted(node.bag.begin(), node.bag.end())) bad("unsorted bag");
    for (int c : node.children) {
      if (c < 0 || c >= i) bad("child index must precede its parent");
      ++parents[c];
      td.edges.emplace_back(c, i);
    }
    auto differs_by = [&](const std::vector<int>& big, const std::vector<int>& small, int v) {
      if (big.size() != small.size() + 1 || !std::binary_search(big.begin(), big.end(), v)) return false;
      std::vector<int> rest;
      std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(rest));
      return rest.size() == 1 && rest[0] == v;
    };
    switch (node.kind) {
      case NiceKind::Leaf:
        if (!node.children.empty() || !node.bag.empty()) bad("leaf must be empty and childless");
        break;
      case NiceKind::Introduce:
        if (node.children.size() != 1 || !differs_by(node.bag, nice.nodes[node.children[0]].bag, node.vertex))
          bad("introduce node " + std::to_string(i) + " malformed");
        break;
      case NiceKind::Forget:
        if (node.children.size() != 1 || !differs_by(nice.nodes[node.children[0]].bag, node.bag, node.vertex))
          bad("forget node " + std::to_string(i) + " malformed");
        break;
      case NiceKind::Join:
        if (node.children.size() != 2 || nice.nodes[node.children[0]].bag != node.bag ||
            nice.nodes[node.children[1]].bag != node.bag)
          bad("join node " + std::to_string(i) + " malformed");
        break;
    }
  }
  for (std::size_t i = 0; i + 1 < parents.size(); ++i)
    if (parents[i] != 1) bad("node " + std::to_string(i) + " must have exactly one parent");
  validate_decomposition(graph, td);
}

std::string write_td(const TreeDecomposition& td, int vertex_count) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << vertex_count << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (int v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (const auto& [x, y] : td.edges) out << x + 1 << ' ' << y + 1 << '\n';
  return out.str();
}

TreeDecomposition read_td(std::string_view text, int* vertex_count) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0, bag_count = -1, n = -1;
  TreeDecomposition td;
  std::vector<bool> defined;
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::InvalidInput, ".td line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head) || head == "c") continue;
    if (head == "s") {
      std::string td_word;
      int max_size = 0;
      if (bag_count >= 0) bad("duplicate solution line");
      if (!(fields >> td_word >> bag_count >> max_size >> n) || td_word != "td" || bag_count < 0 || n < 0)
        bad("expected 's td <bags> <max bag size> <vertices>'");
      td.bags.assign(bag_count, {});
      defined.assign(bag_count, false);
    } else if (bag_count < 0) {
      bad("content before solution line");
    } else if (head == "b") {
      int id = 0;
      if (!(fields >> id) || id < 1 || id > bag_count) bad("bad bag id");
      if (defined[id - 1]) bad("bag " + std::to_string(id) + " defined twice");
      defined[id - 1] = true;
      int v = 0;
      while (fields >> v) {
        if (v < 1 || v > n) bad("vertex " + std::to_string(v) + " out of range");
        td.bags[id - 1].push_back(v - 1);
      }
      if (!fields.eof()) bad("non-numeric vertex");
      auto& bag = td.bags[id - 1];
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    } else {
      int x = 0, y = 0;
      try {
        x = std::stoi(head);
      } catch (const std::exception&) {
        bad("unrecognized line");
      }
      if (!(fields >> y) || x < 1 || y < 1 || x > bag_count || y > bag_count) bad("bad tree edge");
      td.edges.emplace_back(x - 1, y - 1);
    }
  }
  if (bag_count < 0) fail(ErrorCode::InvalidInput, ".td: missing solution line");
  if (vertex_count) *vertex_count = n;
  return td;
}

}  // namespace difr
