#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lapspread/graph.hpp"
#include "lapspread/params.hpp"

namespace lapspread {

/// Lower estimates for the common-neighbour minima: `lambda <= λ(G)` and
/// `mu <= μ(G)`. Every bound below is valid for any such pair; the tightest
/// choice is (λ(G), μ(G)).
struct LambdaMu {
  double lambda = 0.0;
  double mu = 0.0;
};

/// A bound value, or the reason it does not apply.
struct Bound {
  std::optional<double> value;
  std::string reason;

  static Bound of(double v) { return {v, {}}; }
  static Bound not_applicable(std::string why) { return {std::nullopt, std::move(why)}; }
  bool defined() const { return value.has_value(); }
};

/// The quantity a bound constrains.
enum class Target { laplacian_index, algebraic_connectivity, spread };
enum class Sense { upper, lower };

std::string_view to_string(Target t);

struct BoundSet {
  // Vertex-wise bounds from the per-vertex quadratic.
  Bound alpha1, beta1, spread_cor32;
  // Degree-extreme bounds (alpha2 and beta2 are the ee3 and ee5 inequalities).
  Bound alpha2, beta2, spread_ee7, spread_ee8;
  // Classical bounds.
  Bound anderson_morley, merris, rojo, li_pan, zhang, grone_merris, fiedler_delta, fiedler_kappa;
};

struct BoundEntry {
  std::string_view name;
  Target target;
  Sense sense;
  const Bound* bound;
};

/// All fifteen bounds in a fixed order, tagged with what they constrain.
std::vector<BoundEntry> entries(const BoundSet& set);

/// (λ(G), μ(G)), or empty when either is undefined. With
/// `mu_zero_if_undefined`, a complete graph yields (λ(G), 0) instead.
std::optional<LambdaMu> tightest_lambda_mu(const StructuralParams& p, bool mu_zero_if_undefined = false);

/// Throws std::invalid_argument if lambda > λ(G) or mu > μ(G).
/// An undefined minimum (empty pair class) imposes no constraint.
void check_lambda_mu(const StructuralParams& p, LambdaMu lm);

/// (d_i - ℓ)² - d_i m_i + λℓ + μ(n - ℓ).
double vertex_term(const StructuralParams& p, Vertex i, LambdaMu lm, double ell);

/// The same quantity expanded as a polynomial in ℓ:
/// ℓ² - (2d_i - λ + μ)ℓ + (d_i² - d_i m_i + μn).
double vertex_quadratic(const StructuralParams& p, Vertex i, LambdaMu lm, double ell);

/// Σ_i vertex_term(i) · x_i². For a nontrivial eigenpair (ℓ, x) of a
/// connected graph this is never positive.
///
/// Throws std::invalid_argument when (ℓ, x) is not an eigenpair of L(G) to
/// within 1e-8 · max(1, ℓ) · ||x||, when ℓ is the trivial eigenvalue, or
/// when lm exceeds (λ(G), μ(G)).
double main_inequality_lhs(const Graph& g, const StructuralParams& p, LambdaMu lm, double ell,
                           std::span<const double> x);

/// Default tolerance on main_inequality_lhs: 1e-7 · ||x||² · n · Δ².
double main_inequality_tolerance(const StructuralParams& p, std::span<const double> x);

/// D_i = 4 d_i m_i - 4(λ - μ) d_i + (λ - μ)² - 4μn, the discriminant of vertex_quadratic.
double vertex_discriminant(const StructuralParams& p, Vertex i, LambdaMu lm);

struct AlphaBeta {
  Bound alpha1;
  Bound beta1;
};

/// Largest upper root and smallest lower root of the per-vertex quadratics,
/// skipping vertices with a negative discriminant.
AlphaBeta alpha1_beta1(const StructuralParams& p, LambdaMu lm);
Bound spread_bound_cor32(const StructuralParams& p, LambdaMu lm);

Bound alpha2(const StructuralParams& p, LambdaMu lm);
Bound beta2(const StructuralParams& p, LambdaMu lm);
Bound spread_ee7(const StructuralParams& p, LambdaMu lm);
/// Only for regular graphs: sqrt((2k - λ + μ)² - 4μn).
Bound spread_ee8(const StructuralParams& p, LambdaMu lm);

double zhang_vertex(const StructuralParams& p, Vertex i);   // d_i + sqrt(d_i m_i)
double li_pan_vertex(const StructuralParams& p, Vertex i);  // sqrt(2 d_i (d_i + m_i))

/// Largest order for which classical_bounds runs the exhaustive
/// vertex-connectivity search.
inline constexpr std::size_t kClassicalKappaOrderLimit = 24;

/// Fills only the classical fields; the rest stay not-applicable.
/// Requires a connected graph with n >= 2.
BoundSet classical_bounds(const Graph& g, const StructuralParams& p);

/// Every bound. With no (λ, μ) supplied the parametrised bounds are reported
/// as not applicable.
BoundSet compute_bounds(const Graph& g, const StructuralParams& p, std::optional<LambdaMu> lm);

}  // namespace lapspread
