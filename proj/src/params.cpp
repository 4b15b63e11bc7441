#include "lapspread/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lapspread {

StructuralParams structural_params(const Graph& g) {
  const std::size_t n = g.order();
  StructuralParams p;
  p.n = n;
  p.degrees.resize(n);
  for (Vertex i = 0; i < n; ++i) p.degrees[i] = static_cast<std::int64_t>(g.degree(i));
  for (Vertex i = 0; i < n; ++i) {
    if (p.degrees[i] == 0) {
      throw std::invalid_argument("vertex " + std::to_string(i) + " is isolated; average 2-degree undefined");
    }
    std::int64_t sum = 0;
    for (Vertex j : g.neighbors(i)) sum += p.degrees[j];
    p.avg2deg.push_back({sum, p.degrees[i]});
  }
  const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.min_degree = *lo;
  p.max_degree = *hi;

  p.common.assign(n * n, 0);
  for (Vertex i = 0; i < n; ++i) {
    p.common[i * n + i] = p.degrees[i];
    for (Vertex j = i + 1; j < n; ++j) {
      const auto w = static_cast<std::int64_t>(common_neighbors(g, i, j));
      p.common[i * n + j] = p.common[j * n + i] = w;
      auto& slot = g.adjacent(i, j) ? p.lambda_g : p.mu_g;
      slot = slot ? std::min(*slot, w) : w;
    }
  }
  return p;
}

bool SrgParameters::feasible() const {
  if (n < 1 || k < 0 || k > n - 1) return false;
  if (lambda < 0 || lambda > k - 1 || mu < 0 || mu > k) return false;
  return k * (k - lambda - 1) == (n - k - 1) * mu;
}

std::string_view to_string(SrgRejection r) {
  switch (r) {
    case SrgRejection::none: return "strongly regular";
    case SrgRejection::not_regular: return "not regular";
    case SrgRejection::lambda_not_constant: return "adjacent pairs have differing common-neighbour counts";
    case SrgRejection::mu_not_constant: return "nonadjacent pairs have differing common-neighbour counts";
    case SrgRejection::complete_graph: return "complete graph (n = k + 1) excluded";
  }
  return "unknown";
}

SrgVerdict detect_srg(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("detect_srg needs at least 2 vertices");
  if (!is_connected(g)) throw std::invalid_argument("detect_srg requires a connected graph");
  if (g.is_complete()) return {std::nullopt, SrgRejection::complete_graph};

  const auto k = static_cast<std::int64_t>(g.degree(0));
  for (Vertex i = 1; i < n; ++i) {
    if (static_cast<std::int64_t>(g.degree(i)) != k) return {std::nullopt, SrgRejection::not_regular};
  }
  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> mu;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const auto w = static_cast<std::int64_t>(common_neighbors(g, i, j));
      const bool adj = g.adjacent(i, j);
      auto& slot = adj ? lambda : mu;
      if (!slot) {
        slot = w;
      } else if (*slot != w) {
        return {std::nullopt, adj ? SrgRejection::lambda_not_constant : SrgRejection::mu_not_constant};
      }
    }
  }
  return {SrgParameters{static_cast<std::int64_t>(n), k, *lambda, *mu}, SrgRejection::none};
}

std::pair<double, double> srg_eigenvalues(const SrgParameters& p) {
  if (p.n == p.k + 1) throw std::invalid_argument("srg_eigenvalues: complete graph (n = k + 1) excluded");
  const double k = static_cast<double>(p.k);
  const double lambda = static_cast<double>(p.lambda);
  const double mu = static_cast<double>(p.mu);
  const double disc = (lambda - mu) * (lambda - mu) + 4.0 * (k - mu);
  if (disc < 0.0) throw std::invalid_argument("srg_eigenvalues: negative discriminant, infeasible parameters");
  const double r = std::sqrt(disc);
  const double centre = 2.0 * k - lambda + mu;
  return {(centre + r) / 2.0, (centre - r) / 2.0};
}

}  // namespace lapspread
