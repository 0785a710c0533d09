#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <string>

#include "difr/instance.hpp"

namespace fixtures {

using namespace difr;

inline std::vector<Color> colors_from(const std::string& s) {
  std::vector<Color> out;
  for (char c : s) out.push_back(c == 'R' ? Color::Red : Color::Blue);
  return out;
}

// Nine vertices, all under majority illusion; the reds form a directed 4-cycle.
inline Instance fig1a(Ratio p = kHalf) {
  return Instance(9,
                  {{0, 5}, {1, 6}, {2, 6}, {2, 7}, {3, 7}, {3, 8}, {4, 8}, {4, 5},
                   {5, 6}, {6, 7}, {7, 8}, {8, 5}},
                  colors_from("BBBBBRRRR"), p);
}

// Two blues each pointing at the same two reds.
inline Instance fig1b(Ratio p = kHalf) {
  return Instance(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, colors_from("BBRR"), p);
}

inline std::vector<Color> random_colors(std::mt19937_64& rng, int n, double red = 0.5) {
  std::bernoulli_distribution coin(red);
  std::vector<Color> colors(n);
  for (auto& c : colors) c = coin(rng) ? Color::Red : Color::Blue;
  return colors;
}

inline Instance random_digraph(std::mt19937_64& rng, int n, double density, Ratio p, double red = 0.5) {
  std::bernoulli_distribution edge(density);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && edge(rng)) edges.push_back({a, b});
  return Instance(n, std::move(edges), random_colors(rng, n, red), p);
}

inline Ratio random_ratio(std::mt19937_64& rng, int max_den = 5) {
  const int den = std::uniform_int_distribution<int>(1, max_den)(rng);
  const int num = std::uniform_int_distribution<int>(0, den)(rng);
  return Ratio(num, den);
}

}  // namespace fixtures
