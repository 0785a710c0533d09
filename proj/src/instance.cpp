#include "difr/instance.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace difr {

namespace {

constexpr std::array<std::pair<KindTag, std::string_view>, 7> kKindNames{{
    {KindTag::Generic, "generic"},
    {KindTag::DirectedCycle, "directed_cycle"},
    {KindTag::UnderlyingCycle, "underlying_cycle"},
    {KindTag::OutwardGrid, "outward_grid"},
    {KindTag::DirectedTree, "directed_tree"},
    {KindTag::Grid, "grid"},
    {KindTag::Planar, "planar"},
}};

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool coords_distinct(const std::vector<Coord>& coords) {
  std::set<Coord> seen(coords.begin(), coords.end());
  return seen.size() == coords.size();
}

}  // namespace

std::string_view kind_name(KindTag kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "generic";
}

std::optional<KindTag> kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  return std::nullopt;
}

Instance::Instance(int n, std::vector<Edge> edges, std::vector<Color> colors, Ratio p,
                   InstanceExtras extras)
    : edges_(std::move(edges)), colors_(std::move(colors)), p_(p), extras_(std::move(extras)) {
  if (n < 0) fail(ErrorCode::InvalidInput, "negative vertex count");
  if (static_cast<int>(colors_.size()) != n)
    fail(ErrorCode::InvalidInput, "color vector has " + std::to_string(colors_.size()) +
                                      " entries for " + std::to_string(n) + " vertices");
  for (const auto& e : edges_) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
      fail(ErrorCode::InvalidInput, "edge (" + std::to_string(e.tail) + "," +
                                        std::to_string(e.head) + ") references unknown vertex");
    if (e.tail == e.head)
      fail(ErrorCode::InvalidInput, "self-loop on vertex " + std::to_string(e.tail));
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i] == edges_[i - 1])
      fail(ErrorCode::InvalidInput, "duplicate edge (" + std::to_string(edges_[i].tail) + "," +
                                        std::to_string(edges_[i].head) + ")");

  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const auto& e : edges_) {
    ++out_offsets_[e.tail + 1];
    ++in_offsets_[e.head + 1];
  }
  for (int v = 0; v < n; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_targets_.resize(edges_.size());
  in_sources_.resize(edges_.size());
  std::vector<int> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_targets_[i] = edges_[i].head;  // edges sorted by tail, then head
    in_sources_[in_fill[edges_[i].head]++] = edges_[i].tail;
  }

  if (extras_.coords && static_cast<int>(extras_.coords->size()) != n)
    fail(ErrorCode::InvalidInput, "coords block size does not match vertex count");
  if (extras_.layers) {
    if (static_cast<int>(extras_.layers->size()) != n)
      fail(ErrorCode::InvalidInput, "layers block size does not match vertex count");
    for (int layer : *extras_.layers)
      if (layer < 0) fail(ErrorCode::InvalidInput, "negative layer index");
  }
  if (extras_.kind && !matches_kind(*this, *extras_.kind))
    fail(ErrorCode::StructureMismatch,
         "instance does not satisfy kind '" + std::string(kind_name(*extras_.kind)) + "'");
}

std::span<const Vertex> Instance::out(Vertex v) const {
  check_vertex(v);
  return {out_targets_.data() + out_offsets_[v],
          static_cast<std::size_t>(out_offsets_[v + 1] - out_offsets_[v])};
}

std::span<const Vertex> Instance::in(Vertex v) const {
  check_vertex(v);
  return {in_sources_.data() + in_offsets_[v],
          static_cast<std::size_t>(in_offsets_[v + 1] - in_offsets_[v])};
}

int Instance::max_out_degree() const {
  int best = 0;
  for (int v = 0; v < size(); ++v) best = std::max(best, out_degree(v));
  return best;
}

bool Instance::has_edge(Vertex tail, Vertex head) const {
  const auto o = out(tail);
  return std::binary_search(o.begin(), o.end(), head);
}

Color Instance::color(Vertex v) const {
  check_vertex(v);
  return colors_[v];
}

std::vector<Vertex> Instance::red_vertices() const {
  std::vector<Vertex> reds;
  for (int v = 0; v < size(); ++v)
    if (colors_[v] == Color::Red) reds.push_back(v);
  return reds;
}

Instance Instance::with_p(Ratio p) const {
  Instance copy = *this;
  copy.p_ = p;
  return copy;
}

Instance Instance::with_colors(std::vector<Color> colors) const {
  return Instance(size(), edges_, std::move(colors), p_, extras_);
}

Instance Instance::with_extras(InstanceExtras extras) const {
  return Instance(size(), edges_, colors_, p_, std::move(extras));
}

void Instance::check_vertex(Vertex v) const {
  if (v < 0 || v >= size())
    fail(ErrorCode::InvalidInput, "unknown vertex id " + std::to_string(v));
}

bool operator==(const Instance& a, const Instance& b) {
  auto same_extras = [](const InstanceExtras& x, const InstanceExtras& y) {
    return x.coords == y.coords && x.layers == y.layers && x.kind == y.kind;
  };
  return a.edges_ == b.edges_ && a.colors_ == b.colors_ && a.p_ == b.p_ &&
         same_extras(a.extras_, b.extras_);
}

DemandSet DemandSet::of(int n, std::span<const Vertex> vertices) {
  std::vector<bool> mask(n, false);
  for (Vertex v : vertices) {
    if (v < 0 || v >= n)
      fail(ErrorCode::InvalidInput, "demand vertex " + std::to_string(v) + " out of range");
    mask[v] = true;
  }
  return DemandSet(std::move(mask));
}

bool DemandSet::is_all() const {
  return std::all_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
}

std::vector<Vertex> DemandSet::members() const {
  std::vector<Vertex> out;
  for (int v = 0; v < size(); ++v)
    if (mask_[v]) out.push_back(v);
  return out;
}

DemandSet DemandSet::without(Vertex v) const {
  DemandSet copy = *this;
  if (v >= 0 && v < size()) copy.mask_[v] = false;
  return copy;
}

Recoloring::Recoloring(std::vector<Vertex> flipped) : flipped_(std::move(flipped)) {
  std::sort(flipped_.begin(), flipped_.end());
  flipped_.erase(std::unique(flipped_.begin(), flipped_.end()), flipped_.end());
}

bool Recoloring::contains(Vertex v) const {
  return std::binary_search(flipped_.begin(), flipped_.end(), v);
}

Recoloring Recoloring::merged(const Recoloring& other) const {
  std::vector<Vertex> all = flipped_;
  all.insert(all.end(), other.flipped_.begin(), other.flipped_.end());
  return Recoloring(std::move(all));
}

NeighborCounts neighbor_counts(const Instance& instance, Vertex v) {
  NeighborCounts counts;
  for (Vertex u : instance.out(v)) {
    ++counts.out_degree;
    if (instance.is_red(u))
      ++counts.red_out;
    else
      ++counts.blue_out;
  }
  return counts;
}

int deficiency(const Instance& instance, Vertex v) {
  const auto c = neighbor_counts(instance, v);
  return std::max(0, c.red_out - c.blue_out);
}

int p_deficiency(const Instance& instance, Vertex v, Ratio p) {
  const auto c = neighbor_counts(instance, v);
  const auto need = p.ceil_times(c.out_degree);
  return static_cast<int>(std::max<std::int64_t>(0, need - c.blue_out));
}

int p_deficiency(const Instance& instance, Vertex v) {
  return p_deficiency(instance, v, instance.p());
}

std::vector<Vertex> illusion_set(const Instance& instance, const DemandSet& demand) {
  std::vector<Vertex> result;
  for (int v = 0; v < instance.size(); ++v)
    if (demand.contains(v) && p_deficiency(instance, v) > 0) result.push_back(v);
  return result;
}

VerifyResult verify(const Instance& instance, const Recoloring& recoloring,
                    const DemandSet& demand) {
  VerifyResult result;
  std::vector<Color> colors = instance.colors();
  for (Vertex v : recoloring.flipped()) {
    if (v < 0 || v >= instance.size()) {
      result.reason = VerifyReason::UnknownVertex;
      result.bad_flips.push_back(v);
      continue;
    }
    if (colors[v] == Color::Blue) {
      if (result.reason == VerifyReason::Ok) result.reason = VerifyReason::FlipsBlueVertex;
      result.bad_flips.push_back(v);
    }
    colors[v] = Color::Blue;
  }
  if (!result.bad_flips.empty()) return result;

  const Ratio p = instance.p();
  for (int v = 0; v < instance.size(); ++v) {
    if (!demand.contains(v)) continue;
    int blue = 0;
    const auto outs = instance.out(v);
    for (Vertex u : outs)
      if (colors[u] == Color::Blue) ++blue;
    if (blue < p.ceil_times(static_cast<std::int64_t>(outs.size())))
      result.violators.push_back(v);
  }
  result.valid = result.violators.empty();
  result.reason = result.valid ? VerifyReason::Ok : VerifyReason::StillUnderIllusion;
  return result;
}

VerifyResult verify(const Instance& instance, const Recoloring& recoloring) {
  return verify(instance, recoloring, DemandSet::all(instance.size()));
}

Instance apply_recoloring(const Instance& instance, const Recoloring& recoloring) {
  std::vector<Color> colors = instance.colors();
  for (Vertex v : recoloring.flipped()) {
    instance.check_vertex(v);
    if (colors[v] != Color::Red)
      fail(ErrorCode::InvalidInput, "recoloring flips blue vertex " + std::to_string(v));
    colors[v] = Color::Blue;
  }
  return instance.with_colors(std::move(colors));
}

void UndirectedGraph::add_edge(int a, int b) {
  if (a == b) return;
  auto insert = [](std::vector<int>& list, int x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adj[a], b);
  insert(adj[b], a);
}

int UndirectedGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adj) total += list.size();
  return static_cast<int>(total / 2);
}

UndirectedGraph underlying_graph(const Instance& instance) {
  UndirectedGraph g(instance.size());
  for (const auto& e : instance.edges()) g.add_edge(e.tail, e.head);
  return g;
}

bool has_antiparallel_pair(const Instance& instance) {
  for (const auto& e : instance.edges())
    if (e.tail < e.head && instance.has_edge(e.head, e.tail)) return true;
  return false;
}

bool is_directed_cycle(const Instance& instance) {
  const int n = instance.size();
  if (n < 2) return false;
  for (int v = 0; v < n; ++v)
    if (instance.out_degree(v) != 1 || instance.in(v).size() != 1) return false;
  int steps = 0;
  Vertex v = 0;
  do {
    v = instance.out(v)[0];
    ++steps;
  } while (v != 0 && steps <= n);
  return steps == n;
}

bool is_underlying_cycle(const Instance& instance) {
  const int n = instance.size();
  if (n < 3 || has_antiparallel_pair(instance)) return false;
  const auto g = underlying_graph(instance);
  for (int v = 0; v < n; ++v)
    if (g.adj[v].size() != 2) return false;
  int prev = -1, cur = 0, steps = 0;
  do {
    const int next = g.adj[cur][0] != prev ? g.adj[cur][0] : g.adj[cur][1];
    prev = cur;
    cur = next;
    ++steps;
  } while (cur != 0 && steps <= n);
  return steps == n;
}

bool is_underlying_forest(const Instance& instance) {
  if (has_antiparallel_pair(instance)) return false;
  DisjointSets sets(instance.size());
  for (const auto& e : instance.edges())
    if (!sets.unite(e.tail, e.head)) return false;
  return true;
}

bool is_underlying_tree(const Instance& instance) {
  if (!is_underlying_forest(instance)) return false;
  return instance.size() == 0 ||
         static_cast<int>(instance.edges().size()) == instance.size() - 1;
}

bool is_grid_embedded(const Instance& instance) {
  const auto& coords = instance.coords();
  if (!coords || !coords_distinct(*coords)) return false;
  for (const auto& e : instance.edges()) {
    const auto a = (*coords)[e.tail], b = (*coords)[e.head];
    if (std::abs(a.row - b.row) + std::abs(a.col - b.col) != 1) return false;
  }
  return true;
}

bool is_outward_grid(const Instance& instance) {
  if (!is_grid_embedded(instance)) return false;
  const auto& coords = *instance.coords();
  for (const auto& e : instance.edges()) {
    const auto a = coords[e.tail], b = coords[e.head];
    const bool right = b.row == a.row && b.col == a.col + 1;
    const bool down = b.col == a.col && b.row == a.row + 1;
    if (!right && !down) return false;
  }
  return true;
}

bool is_full_grid(const Instance& instance) {
  if (!is_grid_embedded(instance) || has_antiparallel_pair(instance)) return false;
  const auto& coords = *instance.coords();
  if (coords.empty()) return true;
  int r0 = coords[0].row, r1 = r0, c0 = coords[0].col, c1 = c0;
  for (const auto& c : coords) {
    r0 = std::min(r0, c.row);
    r1 = std::max(r1, c.row);
    c0 = std::min(c0, c.col);
    c1 = std::max(c1, c.col);
  }
  const long rows = r1 - r0 + 1, cols = c1 - c0 + 1;
  if (rows * cols != static_cast<long>(coords.size())) return false;
  const long expected_edges = rows * (cols - 1) + cols * (rows - 1);
  return static_cast<long>(instance.edges().size()) == expected_edges;
}

bool matches_kind(const Instance& instance, KindTag kind) {
  switch (kind) {
    case KindTag::Generic:
      return true;
    case KindTag::DirectedCycle:
      return is_directed_cycle(instance);
    case KindTag::UnderlyingCycle:
      return is_underlying_cycle(instance);
    case KindTag::OutwardGrid:
      return is_outward_grid(instance);
    case KindTag::DirectedTree:
      return is_underlying_tree(instance);
    case KindTag::Grid:
      return is_grid_embedded(instance);
    case KindTag::Planar:
      return instance.layers().has_value() || is_grid_embedded(instance);
  }
  return false;
}

Instance induced_subinstance(const Instance& instance, std::span<const Vertex> vertices) {
  std::vector<int> index(instance.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    instance.check_vertex(vertices[i]);
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  std::vector<Color> colors;
  for (Vertex v : vertices) {
    colors.push_back(instance.color(v));
    for (Vertex u : instance.out(v))
      if (index[u] >= 0) edges.push_back({index[v], index[u]});
  }
  InstanceExtras extras;
  if (instance.coords()) {
    std::vector<Coord> coords;
    for (Vertex v : vertices) coords.push_back((*instance.coords())[v]);
    extras.coords = std::move(coords);
  }
  if (instance.layers()) {
    std::vector<int> layers;
    for (Vertex v : vertices) layers.push_back((*instance.layers())[v]);
    extras.layers = std::move(layers);
  }
  return Instance(static_cast<int>(vertices.size()), std::move(edges), std::move(colors),
                  instance.p(), std::move(extras));
}

}  // namespace difr
