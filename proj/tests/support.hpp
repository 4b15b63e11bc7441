#pragma once

#include <random>
#include <vector>

#include "lapspread/graph.hpp"

namespace support {

// Independent of the library's generator on purpose.
inline lapspread::Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  lapspread::GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) b.add_edge(i, j);
    }
  }
  return b.build();
}

inline std::vector<lapspread::Graph> random_connected_suite(std::size_t count, std::size_t n_min, std::size_t n_max,
                                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(n_min, n_max);
  const double ps[] = {0.3, 0.5, 0.8};
  std::vector<lapspread::Graph> out;
  while (out.size() < count) {
    auto g = random_graph(order(rng), ps[out.size() % 3], rng());
    if (lapspread::is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<std::vector<int>> adjacency(const lapspread::Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& [i, j] : g.edges()) a[i][j] = a[j][i] = 1;
  return a;
}

// (A²)_ij straight from the adjacency matrix.
inline int common_count(const std::vector<std::vector<int>>& a, std::size_t i, std::size_t j) {
  int c = 0;
  for (std::size_t k = 0; k < a.size(); ++k) c += a[i][k] * a[k][j];
  return c;
}

}  // namespace support
