#include <random>

#include "difr/reductions.hpp"

namespace difr {

namespace {

// Explicit conversions keep output identical across standard libraries;
// only the engine itself is specified bit-exactly.
struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine() % n; }
  double unit() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
  bool chance(double prob) { return unit() < prob; }
  std::mt19937_64 engine;
};

std::vector<Color> random_colors(Rng& rng, int n, double red) {
  std::vector<Color> colors(n);
  for (auto& c : colors) c = rng.chance(red) ? Color::Red : Color::Blue;
  return colors;
}

Instance grid(Rng& rng, int rows, int cols, double red, Ratio p, KindTag kind, bool outward) {
  std::vector<Coord> coords;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) coords.push_back({r, c});
  std::vector<Edge> edges;
  auto add = [&](int a, int b) {
    if (outward || rng.chance(0.5))
      edges.push_back({a, b});
    else
      edges.push_back({b, a});
  };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) add(v, v + 1);
      if (r + 1 < rows) add(v, v + cols);
    }
  const auto colors = random_colors(rng, rows * cols, red);
  InstanceExtras extras;
  extras.coords = std::move(coords);
  extras.kind = kind;
  return Instance(rows * cols, std::move(edges), colors, p, std::move(extras));
}

}  // namespace

std::vector<std::string> generator_kinds() {
  return {"directed_cycle", "underlying_cycle", "outward_grid", "grid",
          "directed_tree",  "dag_bipartite",    "planar_grid",  "generic"};
}

Instance generate_random(const GenerateParams& params) {
  const int n = params.n;
  if (n < 1 || n > 1'000'000) fail(ErrorCode::InvalidInput, "n must lie in 1..1000000");
  if (params.cols < 0 || params.cols > 1000) fail(ErrorCode::InvalidInput, "cols must lie in 0..1000");
  if (!(params.red >= 0 && params.red <= 1)) fail(ErrorCode::InvalidInput, "red fraction must lie in [0,1]");
  Rng rng(params.seed);
  const auto& kind = params.kind;
  const double red = params.red;
  const Ratio p = params.p;

  if (kind == "outward_grid" || kind == "grid" || kind == "planar_grid") {
    const int cols = params.cols > 0 ? params.cols : n;
    if (static_cast<long>(n) * cols > 1'000'000) fail(ErrorCode::InvalidInput, "grid too large");
    if (kind == "outward_grid") return grid(rng, n, cols, red, p, KindTag::OutwardGrid, true);
    return grid(rng, n, cols, red, p, kind == "grid" ? KindTag::Grid : KindTag::Planar, false);
  }

  std::vector<Edge> edges;
  std::optional<KindTag> tag;
  if (kind == "directed_cycle") {
    if (n < 2) fail(ErrorCode::InvalidInput, "a directed cycle needs n >= 2");
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    tag = KindTag::DirectedCycle;
  } else if (kind == "underlying_cycle") {
    if (n < 3) fail(ErrorCode::InvalidInput, "an underlying cycle needs n >= 3");
    for (int v = 0; v < n; ++v) {
      const int w = (v + 1) % n;
      edges.push_back(rng.chance(0.5) ? Edge{v, w} : Edge{w, v});
    }
    tag = KindTag::UnderlyingCycle;
  } else if (kind == "directed_tree") {
    for (int v = 1; v < n; ++v) {
      const int parent = static_cast<int>(rng.below(v));
      edges.push_back(rng.chance(0.5) ? Edge{parent, v} : Edge{v, parent});
    }
    tag = KindTag::DirectedTree;
  } else if (kind == "dag_bipartite") {
    const int top = (n + 1) / 2;
    for (int a = 0; a < top; ++a)
      for (int b = top; b < n; ++b)
        if (rng.chance(0.4)) edges.push_back({a, b});
  } else if (kind == "generic") {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && rng.chance(0.3)) edges.push_back({a, b});
  } else {
    fail(ErrorCode::InvalidInput, "unknown generator kind '" + kind + "'");
  }
  const auto colors = random_colors(rng, n, red);
  InstanceExtras extras;
  extras.kind = tag;
  return Instance(n, std::move(edges), colors, p, std::move(extras));
}

}  // namespace difr
