#include "lapspread/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lapspread/spectral.hpp"

namespace lapspread {

namespace {

// d_i * m_i is the integer sum of neighbour degrees; using it directly keeps
// the discriminants exact for integral (λ, μ).
double dm(const StructuralParams& p, Vertex i) { return static_cast<double>(p.avg2deg[i].neighbor_degree_sum); }

double n_of(const StructuralParams& p) { return static_cast<double>(p.n); }

}  // namespace

std::string_view to_string(Target t) {
  switch (t) {
    case Target::laplacian_index: return "l1";
    case Target::algebraic_connectivity: return "l_n_minus_1";
    case Target::spread: return "spread";
  }
  return "unknown";
}

std::vector<BoundEntry> entries(const BoundSet& s) {
  using T = Target;
  using S = Sense;
  return {
      {"alpha1", T::laplacian_index, S::upper, &s.alpha1},
      {"beta1", T::algebraic_connectivity, S::lower, &s.beta1},
      {"spread_cor32", T::spread, S::upper, &s.spread_cor32},
      {"alpha2", T::laplacian_index, S::upper, &s.alpha2},
      {"beta2", T::algebraic_connectivity, S::lower, &s.beta2},
      {"spread_ee7", T::spread, S::upper, &s.spread_ee7},
      {"spread_ee8", T::spread, S::upper, &s.spread_ee8},
      {"anderson_morley", T::laplacian_index, S::upper, &s.anderson_morley},
      {"merris", T::laplacian_index, S::upper, &s.merris},
      {"rojo", T::laplacian_index, S::upper, &s.rojo},
      {"li_pan", T::laplacian_index, S::upper, &s.li_pan},
      {"zhang", T::laplacian_index, S::upper, &s.zhang},
      {"grone_merris", T::laplacian_index, S::lower, &s.grone_merris},
      {"fiedler_delta", T::algebraic_connectivity, S::upper, &s.fiedler_delta},
      {"fiedler_kappa", T::algebraic_connectivity, S::upper, &s.fiedler_kappa},
  };
}

std::optional<LambdaMu> tightest_lambda_mu(const StructuralParams& p, bool mu_zero_if_undefined) {
  if (!p.lambda_g) return std::nullopt;
  if (!p.mu_g && !mu_zero_if_undefined) return std::nullopt;
  return LambdaMu{static_cast<double>(*p.lambda_g), p.mu_g ? static_cast<double>(*p.mu_g) : 0.0};
}

void check_lambda_mu(const StructuralParams& p, LambdaMu lm) {
  if (p.lambda_g && lm.lambda > static_cast<double>(*p.lambda_g)) {
    throw std::invalid_argument("lambda = " + std::to_string(lm.lambda) + " exceeds lambda(G) = " +
                                std::to_string(*p.lambda_g));
  }
  if (p.mu_g && lm.mu > static_cast<double>(*p.mu_g)) {
    throw std::invalid_argument("mu = " + std::to_string(lm.mu) + " exceeds mu(G) = " + std::to_string(*p.mu_g));
  }
}

double vertex_term(const StructuralParams& p, Vertex i, LambdaMu lm, double ell) {
  const double d = p.d(i);
  return (d - ell) * (d - ell) - dm(p, i) + lm.lambda * ell + lm.mu * (n_of(p) - ell);
}

double vertex_quadratic(const StructuralParams& p, Vertex i, LambdaMu lm, double ell) {
  const double d = p.d(i);
  return ell * ell - (2.0 * d - lm.lambda + lm.mu) * ell + (d * d - dm(p, i) + lm.mu * n_of(p));
}

double main_inequality_tolerance(const StructuralParams& p, std::span<const double> x) {
  const double delta = static_cast<double>(p.max_degree);
  return 1e-7 * dot(x, x) * n_of(p) * delta * delta;
}

double main_inequality_lhs(const Graph& g, const StructuralParams& p, LambdaMu lm, double ell,
                           std::span<const double> x) {
  if (x.size() != g.order()) throw std::invalid_argument("eigenvector length differs from graph order");
  if (!is_connected(g)) throw std::invalid_argument("main inequality requires a connected graph");
  check_lambda_mu(p, lm);
  const double xnorm = norm2(x);
  if (xnorm == 0.0) throw std::invalid_argument("eigenvector is zero");
  if (ell <= kTrivialEigenvalueSnap) throw std::invalid_argument("eigenvalue is the trivial eigenvalue");
  const double residual = eigen_residual(laplacian(g), ell, x);
  if (residual > 1e-8 * std::max(1.0, ell) * xnorm) {
    throw std::invalid_argument("(ell, x) is not an eigenpair: residual " + std::to_string(residual));
  }
  double s = 0.0;
  for (Vertex i = 0; i < g.order(); ++i) s += vertex_term(p, i, lm, ell) * x[i] * x[i];
  return s;
}

double vertex_discriminant(const StructuralParams& p, Vertex i, LambdaMu lm) {
  const double d = p.d(i);
  const double diff = lm.lambda - lm.mu;
  return 4.0 * dm(p, i) - 4.0 * diff * d + diff * diff - 4.0 * lm.mu * n_of(p);
}

AlphaBeta alpha1_beta1(const StructuralParams& p, LambdaMu lm) {
  check_lambda_mu(p, lm);
  std::optional<double> hi;
  std::optional<double> lo;
  for (Vertex i = 0; i < p.n; ++i) {
    const double disc = vertex_discriminant(p, i, lm);
    if (disc < 0.0) continue;
    const double centre = 2.0 * p.d(i) - lm.lambda + lm.mu;
    const double r = std::sqrt(disc);
    hi = std::max(hi.value_or(-INFINITY), (centre + r) / 2.0);
    lo = std::min(lo.value_or(INFINITY), (centre - r) / 2.0);
  }
  if (!hi) {
    const auto why = Bound::not_applicable("every vertex has a negative discriminant");
    return {why, why};
  }
  return {Bound::of(*hi), Bound::of(*lo)};
}

Bound spread_bound_cor32(const StructuralParams& p, LambdaMu lm) {
  const auto ab = alpha1_beta1(p, lm);
  if (!ab.alpha1.defined()) return ab.alpha1;
  return Bound::of(*ab.alpha1.value - *ab.beta1.value);
}

namespace {

double alpha2_disc(const StructuralParams& p, LambdaMu lm) {
  const double c = 2.0 * static_cast<double>(p.max_degree) - lm.lambda + lm.mu;
  return c * c - 4.0 * lm.mu * n_of(p);
}

double beta2_disc(const StructuralParams& p, LambdaMu lm) {
  const double delta = static_cast<double>(p.min_degree);
  const double big = static_cast<double>(p.max_degree);
  const double c = 2.0 * delta - lm.lambda + lm.mu;
  return c * c - 4.0 * lm.mu * n_of(p) - 4.0 * delta * delta + 4.0 * big * big;
}

}  // namespace

Bound alpha2(const StructuralParams& p, LambdaMu lm) {
  check_lambda_mu(p, lm);
  const double disc = alpha2_disc(p, lm);
  if (disc < 0.0) return Bound::not_applicable("negative discriminant (2Δ-λ+μ)²-4μn");
  return Bound::of((2.0 * static_cast<double>(p.max_degree) - lm.lambda + lm.mu + std::sqrt(disc)) / 2.0);
}

Bound beta2(const StructuralParams& p, LambdaMu lm) {
  check_lambda_mu(p, lm);
  const double disc = beta2_disc(p, lm);
  if (disc < 0.0) return Bound::not_applicable("negative discriminant (2δ-λ+μ)²-4μn-4δ²+4Δ²");
  return Bound::of((2.0 * static_cast<double>(p.min_degree) - lm.lambda + lm.mu - std::sqrt(disc)) / 2.0);
}

Bound spread_ee7(const StructuralParams& p, LambdaMu lm) {
  check_lambda_mu(p, lm);
  const double da = alpha2_disc(p, lm);
  const double db = beta2_disc(p, lm);
  if (da < 0.0 || db < 0.0) return Bound::not_applicable("negative discriminant in alpha2 or beta2");
  return Bound::of(static_cast<double>(p.max_degree - p.min_degree) + 0.5 * (std::sqrt(da) + std::sqrt(db)));
}

Bound spread_ee8(const StructuralParams& p, LambdaMu lm) {
  check_lambda_mu(p, lm);
  if (!p.regular()) return Bound::not_applicable("graph is not regular");
  const double disc = alpha2_disc(p, lm);
  if (disc < 0.0) return Bound::not_applicable("negative discriminant (2k-λ+μ)²-4μn");
  return Bound::of(std::sqrt(disc));
}

double zhang_vertex(const StructuralParams& p, Vertex i) { return p.d(i) + std::sqrt(dm(p, i)); }

double li_pan_vertex(const StructuralParams& p, Vertex i) {
  return std::sqrt(2.0 * p.d(i) * (p.d(i) + p.m(i)));
}

BoundSet classical_bounds(const Graph& g, const StructuralParams& p) {
  if (g.order() < 2 || !is_connected(g)) {
    throw std::invalid_argument("classical bounds require a connected graph on at least 2 vertices");
  }
  const auto na = Bound::not_applicable("not computed");
  BoundSet s{na, na, na, na, na, na, na, na, na, na, na, na, na, na, na};

  double am = 0.0;
  double rojo = 0.0;
  for (const auto& [i, j] : g.edges()) {
    am = std::max(am, p.d(i) + p.d(j));
    rojo = std::max(rojo, p.d(i) + p.d(j) - static_cast<double>(p.w(i, j)));
  }
  double merris = 0.0;
  double li_pan = 0.0;
  double zhang = 0.0;
  for (Vertex i = 0; i < p.n; ++i) {
    merris = std::max(merris, p.d(i) + p.m(i));
    li_pan = std::max(li_pan, li_pan_vertex(p, i));
    zhang = std::max(zhang, zhang_vertex(p, i));
  }
  s.anderson_morley = Bound::of(am);
  s.rojo = Bound::of(rojo);
  s.merris = Bound::of(merris);
  s.li_pan = Bound::of(li_pan);
  s.zhang = Bound::of(zhang);
  s.grone_merris = Bound::of(static_cast<double>(p.max_degree) + 1.0);

  if (g.is_complete()) {
    // ℓ_{n-1}(K_n) = n exceeds both κ = n - 1 and δ = n - 1.
    s.fiedler_delta = Bound::not_applicable("complete graph");
    s.fiedler_kappa = Bound::not_applicable("complete graph");
  } else {
    s.fiedler_delta = Bound::of(static_cast<double>(p.min_degree));
    if (g.order() <= kClassicalKappaOrderLimit) {
      s.fiedler_kappa = Bound::of(static_cast<double>(vertex_connectivity(g)));
    } else {
      s.fiedler_kappa = Bound::not_applicable("order exceeds exhaustive vertex-connectivity limit");
    }
  }
  return s;
}

BoundSet compute_bounds(const Graph& g, const StructuralParams& p, std::optional<LambdaMu> lm) {
  BoundSet s = classical_bounds(g, p);
  if (!lm) {
    const auto why = Bound::not_applicable(p.mu_g ? "lambda(G) undefined" : "mu(G) undefined (complete graph)");
    s.alpha1 = s.beta1 = s.spread_cor32 = s.alpha2 = s.beta2 = s.spread_ee7 = s.spread_ee8 = why;
    return s;
  }
  check_lambda_mu(p, *lm);
  const auto ab = alpha1_beta1(p, *lm);
  s.alpha1 = ab.alpha1;
  s.beta1 = ab.beta1;
  s.spread_cor32 = spread_bound_cor32(p, *lm);
  s.alpha2 = alpha2(p, *lm);
  s.beta2 = beta2(p, *lm);
  s.spread_ee7 = spread_ee7(p, *lm);
  s.spread_ee8 = spread_ee8(p, *lm);
  return s;
}

}  // namespace lapspread
