#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapspread/graph.hpp"

namespace lapspread {

enum class NamedGraph { X8, X8c, Y8, Z8, U8, U8c };

std::string_view to_string(NamedGraph g);

/// Builds one of the named order-8 extremal graphs and checks its spectral
/// fingerprint (regularity, λ(G), μ(G), ℓ₁, ℓ₇) before returning.
/// Throws std::logic_error on a fingerprint mismatch.
Graph gen_named(NamedGraph which);

Graph gen_complete(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_path(std::size_t n);
/// K_{1,n-1} with the centre at vertex 0.
Graph gen_star(std::size_t n);
Graph gen_petersen();

/// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.
Graph gen_complete_bipartite(std::size_t a, std::size_t b);

/// Fan F_t on 2t+1 vertices: rim pairs (2k, 2k+1) are edges and the hub
/// (vertex 2t) is adjacent to every rim vertex. Requires t >= 2.
Graph gen_fan(std::size_t t);

/// Cycle sizes n₁ >= n₂ >= ... >= n_t >= 3 whose complement-of-union forms
/// the (n-3)-regular graph K_n - (C_{n₁} ∪ ... ∪ C_{n_t}).
class CyclePartition {
 public:
  /// Sorts the parts nonincreasingly. Throws std::invalid_argument on an
  /// empty list or a part below 3.
  explicit CyclePartition(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t order() const { return order_; }
  std::size_t count() const { return parts_.size(); }
  bool all_triangles() const;
  bool all_odd() const;
  bool has_even_part() const { return !all_odd(); }
  bool has_part_above_three() const { return !all_triangles(); }

  std::string to_string() const;
  friend bool operator==(const CyclePartition&, const CyclePartition&) = default;

 private:
  std::vector<std::size_t> parts_;
  std::size_t order_ = 0;
};

/// Every partition of n into parts >= 3, in reverse lexicographic order.
std::vector<CyclePartition> cycle_partitions(std::size_t n);

/// Complement of the disjoint union of the cycles; part k occupies a
/// consecutive block of vertices. Requires n >= 5.
Graph gen_kn_minus_cycles(const CyclePartition& p);

struct FamilyPrediction {
  std::int64_t lambda_g = 0;
  std::int64_t mu_g = 0;
  bool srg = false;
  double ell1 = 0.0;
  double ell_n_minus_1 = 0.0;
  /// The uncorrected closed form n - cos(2π/n) for a single cycle (t = 1);
  /// equal to ell1 otherwise.
  double ell1_as_printed = 0.0;
  /// Predicted α₁ = α₂ and β₁ = β₂ when some part exceeds 3.
  std::optional<double> alpha;
  std::optional<double> beta;
};

/// Closed-form λ(G), μ(G), SRG flag and ℓ₁/ℓ_{n-1} for K_n minus cycles.
/// Requires n >= 6, except the single 5-cycle (K₅ - C₅ = C₅).
FamilyPrediction predict_family(const CyclePartition& p);

struct CycleSpectrum {
  double ell1 = 0.0;
  /// True algebraic connectivity 2 - 2cos(2π/s).
  double ell_s_minus_1 = 0.0;
  /// The uncorrected expression 2 - cos(2π/s), kept to report the discrepancy.
  double ell_s_minus_1_printed = 0.0;
};

/// ℓ₁(C_s) = 4 for even s and 2 + 2cos(π/s) for odd s. Requires s >= 3.
CycleSpectrum cycle_spectrum(std::size_t s);

/// Parses a family string. Accepted forms:
///   X8 X8c Y8 Z8 U8 U8c petersen
///   K:n C:n P:n star:n Kab:a,b fan:t KnC:n1,n2,...
/// Throws ParseError on anything else.
Graph parse_family(std::string_view family);

}  // namespace lapspread
