#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lapspread/bounds.hpp"
#include "lapspread/graph.hpp"
#include "lapspread/params.hpp"
#include "lapspread/spectral.hpp"

namespace lapspread {

/// A bound counts as attained when |gap| is at or below this.
inline constexpr double kTightnessTolerance = 1e-7;
/// A bound is violated when its gap is below minus this.
inline constexpr double kValidityTolerance = 1e-9;
/// Entries x_i and x_j are treated as distinct when |x_i - x_j| exceeds this times ||x||∞.
inline constexpr double kEigenvectorDifferenceTolerance = 1e-7;

struct PairViolation {
  VertexPair pair;
  std::int64_t common_count = 0;
};

/// Outcome of checking the common-neighbour conditions on one eigenvector:
/// every adjacent pair with x_i != x_j must have exactly λ(G) common
/// neighbours, every nonadjacent such pair exactly μ(G).
struct EqualityEvidence {
  double eigenvalue = 0.0;
  std::size_t basis_index = 0;
  std::vector<PairViolation> violating_pairs;
  bool holds = true;
};

/// Throws std::invalid_argument if (ell, x) is not an eigenpair of L(G) or
/// if λ(G) is undefined.
EqualityEvidence equality_conditions(const Graph& g, const StructuralParams& p, double ell,
                                     std::span<const double> x, double tol = kEigenvectorDifferenceTolerance,
                                     std::size_t basis_index = 0);

/// Equality analysis for one distinct nontrivial eigenvalue.
struct EigenEquality {
  double eigenvalue = 0.0;
  std::size_t multiplicity = 0;
  /// Spectrum indices of the orthonormal basis vectors.
  std::vector<std::size_t> basis;
  /// Main inequality left-hand side on each (unit) basis vector.
  std::vector<double> lhs;
  std::vector<EqualityEvidence> evidence;
  /// Largest and smallest left-hand side over unit vectors of the whole
  /// eigenspace; independent of the basis the solver happened to return.
  double lhs_max = 0.0;
  double lhs_min = 0.0;
  /// Some eigenvector attains equality / every eigenvector does.
  bool tight_some = false;
  bool tight_all = false;
  bool conditions_any = false;
  bool conditions_all = false;
  /// On every basis vector: |lhs| <= tolerance exactly when the conditions hold.
  bool biconditional = true;
};

struct CertificateRow {
  std::string bound;
  Bound value;
  Target target = Target::laplacian_index;
  Sense sense = Sense::upper;
  double attained = 0.0;
  /// value - attained for upper bounds, attained - value for lower bounds;
  /// empty when the bound is not applicable.
  std::optional<double> gap;
  bool tight = false;
};

struct ExtremalityCertificate {
  std::string graph6;
  double ell1 = 0.0;
  double ell_n_minus_1 = 0.0;
  double spread = 0.0;
  /// The (λ, μ) used for the parametrised bounds; empty when undefined.
  std::optional<LambdaMu> lambda_mu;
  /// The (λ, μ) used for the equality analysis (μ = 0 on complete graphs).
  LambdaMu equality_lambda_mu;
  std::vector<CertificateRow> rows;
  std::vector<EigenEquality> eigenvalues;

  const CertificateRow* find(std::string_view bound) const;
  /// Throws std::out_of_range for an unknown bound name.
  bool tight(std::string_view bound) const;
  std::vector<std::string> tight_bounds() const;
  bool biconditional_holds() const;
};

/// Groups the nontrivial eigenvalues (indices 0..n-2 of a connected
/// graph's spectrum) into clusters closer than `tol`.
std::vector<std::vector<std::size_t>> eigenvalue_groups(const Spectrum& s, double tol = kTightnessTolerance);

/// Requires a connected graph on at least two vertices.
ExtremalityCertificate certify_graph(const Graph& g);
ExtremalityCertificate certify_graph(const Graph& g, const StructuralParams& p, const Spectrum& s,
                                     std::optional<LambdaMu> lm);

inline constexpr std::array<std::string_view, 6> kTable1Columns = {"l1",          "alpha1", "alpha2",
                                                                   "l_n_minus_1", "beta1",  "beta2"};

struct Table1Config {
  std::size_t a = 2;
  std::size_t b = 5;
  std::size_t t = 3;
};

struct Table1Row {
  std::string name;
  std::string graph6;
  std::array<double, 6> computed{};
  /// Closed forms; for K_{a,b} the alpha2 entry is (2b + a + sqrt(4b² - 3a²))/2.
  std::array<double, 6> expected{};
  /// Entries exactly as tabulated, with alpha2(K_{a,b}) = x.
  std::array<double, 6> printed{};
  double max_error = 0.0;
  bool matches = false;
  /// Columns whose tabulated entry differs from the computed value.
  std::vector<std::string> printed_deviations;
};

/// The eight rows in table order. Throws std::invalid_argument unless
/// 1 <= a < b and t >= 2.
std::vector<Table1Row> table1(const Table1Config& cfg = {}, double tol = 1e-9);

}  // namespace lapspread
