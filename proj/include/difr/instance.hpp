#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "difr/ratio.hpp"

namespace difr {

using Vertex = int;

enum class Color : std::uint8_t { Blue, Red };

/// Edge (tail, head): head is an out-neighbor of tail, i.e. tail is
/// influenced by head.
struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Coord {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

enum class KindTag {
  Generic,
  DirectedCycle,
  UnderlyingCycle,
  OutwardGrid,
  DirectedTree,
  Grid,
  Planar,
};

std::string_view kind_name(KindTag kind);
std::optional<KindTag> kind_from_name(std::string_view name);

struct InstanceExtras {
  std::optional<std::vector<Coord>> coords;
  std::optional<std::vector<int>> layers;
  std::optional<KindTag> kind;
};

/// Immutable two-colored digraph with a p-illusion threshold.
class Instance {
 public:
  Instance() = default;
  /// Validates: ids in range, no self-loops, no duplicate edges, extras
  /// sized to n, and the kind tag (if any) against its structural check.
  Instance(int n, std::vector<Edge> edges, std::vector<Color> colors, Ratio p,
           InstanceExtras extras = {});

  int size() const { return static_cast<int>(colors_.size()); }
  std::span<const Vertex> out(Vertex v) const;
  std::span<const Vertex> in(Vertex v) const;
  int out_degree(Vertex v) const { return static_cast<int>(out(v).size()); }
  int max_out_degree() const;
  bool has_edge(Vertex tail, Vertex head) const;

  Color color(Vertex v) const;
  bool is_red(Vertex v) const { return color(v) == Color::Red; }
  const std::vector<Color>& colors() const { return colors_; }
  std::vector<Vertex> red_vertices() const;

  /// Edges in ascending (tail, head) order.
  const std::vector<Edge>& edges() const { return edges_; }
  Ratio p() const { return p_; }

  const std::optional<std::vector<Coord>>& coords() const { return extras_.coords; }
  const std::optional<std::vector<int>>& layers() const { return extras_.layers; }
  std::optional<KindTag> kind() const { return extras_.kind; }
  const InstanceExtras& extras() const { return extras_; }

  Instance with_p(Ratio p) const;
  Instance with_colors(std::vector<Color> colors) const;
  Instance with_extras(InstanceExtras extras) const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  std::vector<Edge> edges_;
  std::vector<Color> colors_;
  std::vector<int> out_offsets_;
  std::vector<Vertex> out_targets_;
  std::vector<int> in_offsets_;
  std::vector<Vertex> in_sources_;
  Ratio p_;
  InstanceExtras extras_;
};

/// Vertices whose p-illusion must be eliminated.
class DemandSet {
 public:
  DemandSet() = default;
  static DemandSet all(int n) { return DemandSet(std::vector<bool>(n, true)); }
  static DemandSet none(int n) { return DemandSet(std::vector<bool>(n, false)); }
  static DemandSet of(int n, std::span<const Vertex> vertices);

  bool contains(Vertex v) const { return v >= 0 && v < size() && mask_[v]; }
  int size() const { return static_cast<int>(mask_.size()); }
  bool is_all() const;
  std::vector<Vertex> members() const;
  DemandSet without(Vertex v) const;

  friend bool operator==(const DemandSet&, const DemandSet&) = default;

 private:
  explicit DemandSet(std::vector<bool> mask) : mask_(std::move(mask)) {}
  std::vector<bool> mask_;
};

/// Set of vertices flipped red -> blue; kept sorted and unique.
class Recoloring {
 public:
  Recoloring() = default;
  explicit Recoloring(std::vector<Vertex> flipped);

  const std::vector<Vertex>& flipped() const { return flipped_; }
  int size() const { return static_cast<int>(flipped_.size()); }
  bool contains(Vertex v) const;
  Recoloring merged(const Recoloring& other) const;

  friend bool operator==(const Recoloring&, const Recoloring&) = default;

 private:
  std::vector<Vertex> flipped_;
};

struct NeighborCounts {
  int out_degree = 0;
  int blue_out = 0;
  int red_out = 0;
};

NeighborCounts neighbor_counts(const Instance& instance, Vertex v);
/// Majority deficiency max(0, r_v - b_v).
int deficiency(const Instance& instance, Vertex v);
/// max(0, ceil(p * d) - b_v).
int p_deficiency(const Instance& instance, Vertex v);
int p_deficiency(const Instance& instance, Vertex v, Ratio p);
std::vector<Vertex> illusion_set(const Instance& instance, const DemandSet& demand);

enum class VerifyReason { Ok, FlipsBlueVertex, UnknownVertex, StillUnderIllusion };

struct VerifyResult {
  bool valid = false;
  VerifyReason reason = VerifyReason::Ok;
  std::vector<Vertex> violators;
  std::vector<Vertex> bad_flips;
};

VerifyResult verify(const Instance& instance, const Recoloring& recoloring,
                    const DemandSet& demand);
VerifyResult verify(const Instance& instance, const Recoloring& recoloring);

Instance apply_recoloring(const Instance& instance, const Recoloring& recoloring);

// Structural checks used by the kind tag validator and solver dispatch.
struct UndirectedGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted, no duplicates

  explicit UndirectedGraph(int vertices = 0) : n(vertices), adj(vertices) {}
  void add_edge(int a, int b);
  int edge_count() const;
};

/// Underlying simple undirected graph (antiparallel pairs collapse).
UndirectedGraph underlying_graph(const Instance& instance);
bool has_antiparallel_pair(const Instance& instance);
bool is_directed_cycle(const Instance& instance);
bool is_underlying_cycle(const Instance& instance);
bool is_underlying_forest(const Instance& instance);
bool is_underlying_tree(const Instance& instance);
bool is_outward_grid(const Instance& instance);
bool is_grid_embedded(const Instance& instance);
bool is_full_grid(const Instance& instance);
bool matches_kind(const Instance& instance, KindTag kind);

/// Induced sub-instance on `vertices` (ascending). Vertex i of the result is
/// vertices[i]. Extras are carried over without the kind tag.
Instance induced_subinstance(const Instance& instance, std::span<const Vertex> vertices);

}  // namespace difr
