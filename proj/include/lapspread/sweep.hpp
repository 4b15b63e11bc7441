#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lapspread/families.hpp"
#include "lapspread/graph.hpp"

namespace lapspread {

/// Raised by random_connected when no connected sample turned up within the
/// rejection budget; the caller should raise p.
class RejectionBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kRejectionBudget = 10000;

/// Erdős–Rényi G(n, p) conditioned on connectivity by rejection. Edge
/// coins are drawn in graph6 order (column-major upper triangle) from a
/// xoshiro256** stream seeded with `seed`. Requires n >= 2 and 0 < p < 1.
Graph random_connected(std::size_t n, double p, std::uint64_t seed, std::size_t budget = kRejectionBudget);

/// Uniformly random connected graph with exactly m edges (n - 1 <= m <= n(n-1)/2),
/// again by rejection.
Graph random_connected_m(std::size_t n, std::size_t m, std::uint64_t seed, std::size_t budget = kRejectionBudget);

struct SweepConfig {
  std::size_t n_min = 4;
  std::size_t n_max = 12;
  std::size_t samples = 500;
  /// Sample k uses edge_probabilities[k % size].
  std::vector<double> edge_probabilities = {0.3, 0.5, 0.8};
  /// Draw the edge count uniformly from [n - 1, n(n-1)/2] instead.
  bool uniform_edge_count = false;
  std::uint64_t seed = 7;
  double validity_tolerance = 1e-9;
  double tightness_tolerance = 1e-7;
  /// 0 means one worker per hardware thread.
  std::size_t threads = 0;

  /// Throws std::invalid_argument on an empty or inverted range, n_min < 2,
  /// zero samples or a probability outside (0, 1).
  void validate() const;
};

/// An inequality lhs <= rhs that failed; gap = rhs - lhs < 0.
struct Violation {
  std::string graph6;
  std::string bound;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

struct TightInstance {
  std::string graph6;
  std::string bound;
};

/// An eigenvector on which "main inequality is an equality" and "the
/// common-neighbour conditions hold" disagree.
struct BiconditionalFailure {
  std::string graph6;
  std::size_t basis_index = 0;
  double eigenvalue = 0.0;
  double lhs = 0.0;
  bool conditions_hold = false;
};

struct GraphVerdict {
  std::string graph6;
  std::size_t order = 0;
  std::size_t violations = 0;
  bool biconditional = true;
  std::vector<std::string> tight_bounds;
};

struct PartitionRow {
  std::string partition;
  std::size_t n = 0;
  std::size_t t = 0;
  std::string graph6;
  FamilyPrediction predicted;
  std::int64_t lambda_g = 0;
  std::int64_t mu_g = 0;
  bool srg = false;
  double ell1 = 0.0;
  double ell_n_minus_1 = 0.0;
  std::optional<double> alpha1, alpha2, beta1, beta2;
  bool params_match = false;
  bool spectrum_match = false;
  /// Closed-form α/β values agree (vacuous when no prediction is made).
  bool alpha_beta_match = false;
  bool printed_ell1_deviates = false;
  /// t >= 2 with some even part.
  bool extremal_claim = false;
  /// All of the bounds named in the claim are attained.
  bool extremal_confirmed = false;
  std::vector<std::string> tight_bounds;
};

struct SweepResult {
  std::size_t graphs_tested = 0;
  std::size_t skipped = 0;
  std::vector<Violation> violations;
  std::vector<BiconditionalFailure> biconditional_failures;
  std::vector<TightInstance> tight_instances;
  std::vector<std::string> diagnostics;
  /// Filled by analyze_graphs.
  std::vector<GraphVerdict> verdicts;
  /// Filled by partition_sweep.
  std::vector<PartitionRow> partitions;
  /// Partitions whose printed closed form disagrees with the computed value.
  std::vector<std::string> printed_deviations;

  bool passed() const;
};

/// Every check applied to one connected graph, accumulated into `out`.
/// The bounds are evaluated for (λ(G), μ(G)), (0, 0) and (λ(G), 0), with
/// μ(G) read as 0 on complete graphs.
void check_graph(const Graph& g, const SweepConfig& cfg, SweepResult& out, bool keep_verdict = false);

/// The k-th graph of the randomized suite described by `cfg`, or nullopt
/// when rejection sampling runs out of budget.
std::optional<Graph> sample_graph(const SweepConfig& cfg, std::size_t k);

/// The seeded random sweep; results are merged by sample index, so the
/// output is identical for every thread count.
SweepResult validity_sweep(const SweepConfig& cfg);

/// Applies check_graph to caller-supplied graphs (for instance a graph6
/// stream). Disconnected or trivial graphs are counted as skipped.
SweepResult analyze_graphs(std::span<const Graph> graphs, const SweepConfig& cfg = {});

/// Requires 6 <= n_min <= n_max <= 13.
SweepResult partition_sweep(std::size_t n_min, std::size_t n_max);

}  // namespace lapspread
