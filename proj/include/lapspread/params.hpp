#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "lapspread/graph.hpp"

namespace lapspread {

/// Average 2-degree kept as the exact ratio (sum of neighbour degrees) / d_i.
struct AvgTwoDegree {
  std::int64_t neighbor_degree_sum = 0;
  std::int64_t degree = 0;

  double value() const { return static_cast<double>(neighbor_degree_sum) / static_cast<double>(degree); }
  friend bool operator==(const AvgTwoDegree&, const AvgTwoDegree&) = default;
};

struct StructuralParams {
  std::size_t n = 0;
  std::vector<std::int64_t> degrees;
  std::vector<AvgTwoDegree> avg2deg;
  std::int64_t min_degree = 0;
  std::int64_t max_degree = 0;
  /// Minimum common-neighbour count over adjacent pairs; empty if there are no edges.
  std::optional<std::int64_t> lambda_g;
  /// Minimum over nonadjacent pairs; empty for complete graphs.
  std::optional<std::int64_t> mu_g;
  /// w_ij = |N(i) ∩ N(j)|, row-major n×n, diagonal holds d_i.
  std::vector<std::int64_t> common;

  std::int64_t w(Vertex i, Vertex j) const { return common[i * n + j]; }
  double m(Vertex i) const { return avg2deg[i].value(); }
  double d(Vertex i) const { return static_cast<double>(degrees[i]); }
  bool regular() const { return min_degree == max_degree; }
};

/// Throws std::invalid_argument if some vertex is isolated.
StructuralParams structural_params(const Graph& g);

struct SrgParameters {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  /// k(k - lambda - 1) == (n - k - 1) mu together with the range checks
  /// 0 <= lambda <= k - 1 and 0 <= mu <= k.
  bool feasible() const;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

enum class SrgRejection {
  none,
  not_regular,
  lambda_not_constant,
  mu_not_constant,
  complete_graph,
};

std::string_view to_string(SrgRejection r);

struct SrgVerdict {
  std::optional<SrgParameters> params;
  SrgRejection reason = SrgRejection::none;

  bool strongly_regular() const { return params.has_value(); }
};

/// Requires a connected graph on n >= 2 vertices (throws otherwise).
/// Complete graphs are rejected with SrgRejection::complete_graph.
SrgVerdict detect_srg(const Graph& g);

/// The two nontrivial Laplacian eigenvalues (ℓ₁, ℓ_{n-1}) of an SRG:
/// (2k - λ + μ ± sqrt((λ - μ)² + 4(k - μ))) / 2.
/// Throws std::invalid_argument when n == k + 1 or the discriminant is negative.
std::pair<double, double> srg_eigenvalues(const SrgParameters& p);

}  // namespace lapspread
