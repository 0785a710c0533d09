#include <algorithm>
#include <sstream>

#include "difr/reductions.hpp"

namespace difr {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace

HittingSetInstance parse_hitting_set(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::InvalidInput, "hitting set line " + std::to_string(line_no) + ": " + why);
  };
  HittingSetInstance hs;
  int m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long> numbers;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        numbers.push_back(std::stol(token, &used));
        if (used != token.size()) bad("not an integer: " + token);
      } catch (const std::logic_error&) {
        bad("not an integer: " + token);
      }
    }
    if (numbers.empty()) continue;
    if (m < 0) {
      if (numbers.size() < 2 || numbers.size() > 3) bad("expected 'n m [k]'");
      if (numbers[0] < 0 || numbers[1] < 0 || numbers[0] > 1'000'000 || numbers[1] > 1'000'000)
        bad("sizes out of range");
      hs.universe = static_cast<int>(numbers[0]);
      m = static_cast<int>(numbers[1]);
      hs.budget = numbers.size() == 3 ? static_cast<int>(numbers[2]) : 0;
      if (hs.budget < 0) bad("negative budget");
      continue;
    }
    if (static_cast<int>(hs.sets.size()) == m) bad("more sets than declared");
    std::vector<int> set;
    for (long u : numbers) {
      if (u < 1 || u > hs.universe) bad("element " + std::to_string(u) + " outside 1.." + std::to_string(hs.universe));
      set.push_back(static_cast<int>(u - 1));
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) bad("repeated element");
    hs.sets.push_back(std::move(set));
  }
  if (m < 0) fail(ErrorCode::InvalidInput, "hitting set: missing header");
  if (static_cast<int>(hs.sets.size()) != m)
    fail(ErrorCode::InvalidInput, "hitting set: declared " + std::to_string(m) + " sets, found " +
                                      std::to_string(hs.sets.size()));
  return hs;
}

std::string emit_hitting_set(const HittingSetInstance& hs) {
  std::ostringstream out;
  out << hs.universe << ' ' << hs.sets.size() << ' ' << hs.budget << '\n';
  for (const auto& set : hs.sets) {
    for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i] + 1;
    out << '\n';
  }
  return out.str();
}

HittingSetReduction reduce_hitting_set(const HittingSetInstance& hs, Ratio p) {
  if (p.is_zero() || p.num() == p.den())
    fail(ErrorCode::PreconditionViolated, "reduction needs 0 < p < 1, got " + p.str());
  const std::int64_t a = p.num(), b = p.den();
  const std::int64_t inverse = ceil_div(b, a);  // ceil(1/p)
  std::int64_t d = 0;
  for (std::size_t j = 0; j < hs.sets.size(); ++j) {
    const auto dj = static_cast<std::int64_t>(hs.sets[j].size());
    if (dj <= inverse)
      fail(ErrorCode::PreconditionViolated,
           "set " + std::to_string(j + 1) + " has " + std::to_string(dj) +
               " elements; needs more than ceil(1/p) = " + std::to_string(inverse));
    for (int u : hs.sets[j])
      if (u < 0 || u >= hs.universe) fail(ErrorCode::InvalidInput, "element outside universe");
    d = std::max(d, dj);
  }

  HittingSetReduction r;
  r.budget = hs.budget;
  r.universe = hs.universe;
  r.set_count = static_cast<int>(hs.sets.size());
  // Largest x with x < p d / (1 - p): enough dummies for the biggest set.
  r.dummy_count = hs.sets.empty() ? 0 : static_cast<int>(ceil_div(a * d, b - a) - 1);
  for (const auto& set : hs.sets) {
    // Smallest x_j with p (d_j + x_j) <= x_j + 1.
    const auto dj = static_cast<std::int64_t>(set.size());
    const auto xj = std::max<std::int64_t>(0, ceil_div(a * dj - b, b - a));
    if (xj > r.dummy_count)
      fail(ErrorCode::PreconditionViolated, "set needs more dummies than the construction provides");
    r.extra_blues.push_back(static_cast<int>(xj));
  }

  const int n = hs.universe + r.set_count + r.dummy_count;
  std::vector<Color> colors(n, Color::Blue);
  for (int i = 0; i < hs.universe; ++i) colors[i] = Color::Red;
  std::vector<Edge> edges;
  for (int j = 0; j < r.set_count; ++j) {
    for (int u : hs.sets[j]) edges.push_back({r.set_vertex(j), u});
    for (int t = 0; t < r.extra_blues[j]; ++t)
      edges.push_back({r.set_vertex(j), hs.universe + r.set_count + t});
  }
  r.instance = Instance(n, std::move(edges), std::move(colors), p);

  for (int j = 0; j < r.set_count; ++j) {
    const int def = p_deficiency(r.instance, r.set_vertex(j));
    if (def != 1)
      fail(ErrorCode::PreconditionViolated,
           "self-check failed: set vertex " + std::to_string(j + 1) + " has p-deficiency " +
               std::to_string(def) + " with " + std::to_string(r.extra_blues[j]) + " dummies");
  }
  for (Vertex v = 0; v < n; ++v) r.max_deficiency = std::max(r.max_deficiency, p_deficiency(r.instance, v));
  return r;
}

Recoloring hitting_set_to_flips(const HittingSetReduction& r, const std::vector<int>& hitting_set) {
  for (int u : hitting_set)
    if (u < 0 || u >= r.universe) fail(ErrorCode::InvalidInput, "element outside universe");
  return Recoloring(hitting_set);
}

std::vector<int> flips_to_hitting_set(const HittingSetReduction& r, const Recoloring& flips) {
  for (Vertex v : flips.flipped())
    if (v < 0 || v >= r.universe)
      fail(ErrorCode::Infeasible, "flip of vertex " + std::to_string(v) + " is not an element vertex");
  return flips.flipped();
}

}  // namespace difr
