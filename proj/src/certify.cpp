#include "lapspread/certify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lapspread/families.hpp"
#include "lapspread/graph6.hpp"

namespace lapspread {

EqualityEvidence equality_conditions(const Graph& g, const StructuralParams& p, double ell,
                                     std::span<const double> x, double tol, std::size_t basis_index) {
  if (x.size() != g.order()) throw std::invalid_argument("eigenvector length differs from graph order");
  const double xnorm = norm2(x);
  if (xnorm == 0.0) throw std::invalid_argument("eigenvector is zero");
  const double residual = eigen_residual(laplacian(g), ell, x);
  if (residual > 1e-8 * std::max(1.0, std::abs(ell)) * xnorm) {
    throw std::invalid_argument("(ell, x) is not an eigenpair: residual " + std::to_string(residual));
  }
  if (!p.lambda_g) throw std::invalid_argument("lambda(G) undefined for a graph without edges");

  EqualityEvidence ev;
  ev.eigenvalue = ell;
  ev.basis_index = basis_index;
  const double threshold = tol * norm_inf(x);
  const std::size_t n = g.order();
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (std::abs(x[i] - x[j]) <= threshold) continue;
      const bool adj = g.adjacent(i, j);
      const std::int64_t w = p.w(i, j);
      // A nonadjacent pair exists here, so mu_g is defined.
      const std::int64_t required = adj ? *p.lambda_g : *p.mu_g;
      if (w != required) ev.violating_pairs.push_back({{i, j, adj}, w});
    }
  }
  ev.holds = ev.violating_pairs.empty();
  return ev;
}

std::vector<std::vector<std::size_t>> eigenvalue_groups(const Spectrum& s, double tol) {
  std::vector<std::vector<std::size_t>> groups;
  if (s.size() < 2) return groups;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    if (!groups.empty() && std::abs(s.values[groups.back().back()] - s.values[k]) <= tol) {
      groups.back().push_back(k);
    } else {
      groups.push_back({k});
    }
  }
  return groups;
}

namespace {

EigenEquality analyse_eigenspace(const Graph& g, const StructuralParams& p, const Spectrum& s,
                                 const std::vector<std::size_t>& basis, LambdaMu lm) {
  EigenEquality e;
  e.basis = basis;
  e.multiplicity = basis.size();
  double sum = 0.0;
  for (auto k : basis) sum += s.values[k];
  e.eigenvalue = sum / static_cast<double>(basis.size());

  const std::size_t n = g.order();
  std::vector<double> terms(n);
  for (Vertex i = 0; i < n; ++i) terms[i] = vertex_term(p, i, lm, e.eigenvalue);
  SymMatrix restricted(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a; b < basis.size(); ++b) {
      double v = 0.0;
      for (Vertex i = 0; i < n; ++i) v += terms[i] * s.vectors[basis[a]][i] * s.vectors[basis[b]][i];
      restricted.set(a, b, v);
    }
  }
  const auto rs = eigensolve(restricted);
  e.lhs_max = rs.values.front();
  e.lhs_min = rs.values.back();
  e.tight_some = e.lhs_max >= -kTightnessTolerance;
  e.tight_all = e.lhs_min >= -kTightnessTolerance;

  e.conditions_all = true;
  for (auto k : basis) {
    const auto& x = s.vectors[k];
    const double lhs = main_inequality_lhs(g, p, lm, s.values[k], x) / dot(x, x);
    auto ev = equality_conditions(g, p, s.values[k], x, kEigenvectorDifferenceTolerance, k);
    const bool tight = std::abs(lhs) <= kTightnessTolerance;
    if (tight != ev.holds) e.biconditional = false;
    e.conditions_any = e.conditions_any || ev.holds;
    e.conditions_all = e.conditions_all && ev.holds;
    e.lhs.push_back(lhs);
    e.evidence.push_back(std::move(ev));
  }
  return e;
}

CertificateRow make_row(std::string name, Target target, Sense sense, Bound value, double attained) {
  CertificateRow r;
  r.bound = std::move(name);
  r.target = target;
  r.sense = sense;
  r.attained = attained;
  if (value.defined()) {
    r.gap = sense == Sense::upper ? *value.value - attained : attained - *value.value;
    r.tight = std::abs(*r.gap) <= kTightnessTolerance;
  }
  r.value = std::move(value);
  return r;
}

}  // namespace

const CertificateRow* ExtremalityCertificate::find(std::string_view bound) const {
  for (const auto& r : rows) {
    if (r.bound == bound) return &r;
  }
  return nullptr;
}

bool ExtremalityCertificate::tight(std::string_view bound) const {
  const auto* r = find(bound);
  if (!r) throw std::out_of_range("no certificate row named " + std::string(bound));
  return r->tight;
}

std::vector<std::string> ExtremalityCertificate::tight_bounds() const {
  std::vector<std::string> out;
  for (const auto& r : rows) {
    if (r.tight) out.push_back(r.bound);
  }
  return out;
}

bool ExtremalityCertificate::biconditional_holds() const {
  return std::all_of(eigenvalues.begin(), eigenvalues.end(), [](const EigenEquality& e) { return e.biconditional; });
}

ExtremalityCertificate certify_graph(const Graph& g) {
  const auto p = structural_params(g);
  return certify_graph(g, p, laplacian_spectrum(g), tightest_lambda_mu(p));
}

ExtremalityCertificate certify_graph(const Graph& g, const StructuralParams& p, const Spectrum& s,
                                     std::optional<LambdaMu> lm) {
  const std::size_t n = g.order();
  if (n < 2 || !is_connected(g)) throw std::invalid_argument("certify_graph requires a connected graph with n >= 2");

  ExtremalityCertificate c;
  c.graph6 = to_graph6(g);
  c.ell1 = s.values.front();
  c.ell_n_minus_1 = s.values[n - 2];
  c.spread = c.ell1 - c.ell_n_minus_1;
  c.lambda_mu = lm;
  c.equality_lambda_mu = *tightest_lambda_mu(p, true);

  const auto bounds = compute_bounds(g, p, lm);
  for (const auto& e : entries(bounds)) {
    const double attained = e.target == Target::laplacian_index          ? c.ell1
                            : e.target == Target::algebraic_connectivity ? c.ell_n_minus_1
                                                                         : c.spread;
    c.rows.push_back(make_row(std::string(e.name), e.target, e.sense, *e.bound, attained));
  }

  for (const auto& group : eigenvalue_groups(s)) {
    c.eigenvalues.push_back(analyse_eigenspace(g, p, s, group, c.equality_lambda_mu));
  }
  // The main inequality reads lhs <= 0; the attained value is the largest
  // lhs over unit vectors of the eigenspace.
  const Bound zero = lm ? Bound::of(0.0) : Bound::not_applicable("lambda(G) or mu(G) undefined");
  c.rows.push_back(make_row("maineq_l1", Target::laplacian_index, Sense::upper, zero, c.eigenvalues.front().lhs_max));
  c.rows.push_back(
      make_row("maineq_ln1", Target::algebraic_connectivity, Sense::upper, zero, c.eigenvalues.back().lhs_max));
  return c;
}

namespace {

struct Table1Source {
  std::string name;
  Graph graph;
  std::array<double, 6> expected;
  std::array<double, 6> printed;
};

std::array<double, 6> computed_row(const Graph& g) {
  const auto p = structural_params(g);
  const auto s = laplacian_spectrum(g);
  const auto b = compute_bounds(g, p, tightest_lambda_mu(p));
  auto get = [](const Bound& x) { return x.value.value_or(std::nan("")); };
  return {s.values.front(), get(b.alpha1), get(b.alpha2), s.values[g.order() - 2], get(b.beta1), get(b.beta2)};
}

}  // namespace

std::vector<Table1Row> table1(const Table1Config& cfg, double tol) {
  if (cfg.a < 1 || cfg.a >= cfg.b) throw std::invalid_argument("table1 needs 1 <= a < b");
  if (cfg.t < 2) throw std::invalid_argument("table1 needs t >= 2");

  const double r17 = std::sqrt(17.0);
  const double a = static_cast<double>(cfg.a);
  const double b = static_cast<double>(cfg.b);
  const double t = static_cast<double>(cfg.t);
  const double x = (2 * b + a + std::sqrt(a * (4 * b - 3 * a))) / 2;
  const double alpha2_kab = (2 * b + a + std::sqrt(4 * b * b - 3 * a * a)) / 2;
  const double y = 2 * t + std::sqrt(2 * t - 1);
  const double z = 2 * t + std::sqrt(4 * t * t - 2 * t - 1);
  const double w = 2 - std::sqrt(4 * t * t - 2 * t - 1);
  const double hi8 = (7 + r17) / 2;
  const double lo8 = (7 - r17) / 2;
  const double hi8c = (9 + r17) / 2;
  const double lo8c = (9 - r17) / 2;
  const double z7 = (11 - std::sqrt(5.0)) / 2;

  std::vector<Table1Source> sources;
  auto add = [&](std::string name, Graph g, std::array<double, 6> expected, std::array<double, 6> printed) {
    sources.push_back({std::move(name), std::move(g), expected, printed});
  };
  auto same = [&](std::string name, Graph g, std::array<double, 6> v) { add(std::move(name), std::move(g), v, v); };
  same("X8", gen_named(NamedGraph::X8), {hi8, hi8, hi8, lo8, lo8, lo8});
  same("X8c", gen_named(NamedGraph::X8c), {hi8c, hi8c, hi8c, lo8c, lo8c, lo8c});
  same("Y8", gen_named(NamedGraph::Y8), {8, 8, 8, 4, 4, 4});
  same("Z8", gen_named(NamedGraph::Z8), {8, 8, 8, z7, 4, 4});
  same("U8", gen_named(NamedGraph::U8), {6, 8, 8, 2, 2, 2});
  same("U8c", gen_named(NamedGraph::U8c), {6, 6, 6, 2, 0, 0});
  add("K_{" + std::to_string(cfg.a) + "," + std::to_string(cfg.b) + "}", gen_complete_bipartite(cfg.a, cfg.b),
      {a + b, x, alpha2_kab, a, a, 2 * a - b}, {a + b, x, x, a, a, 2 * a - b});
  same("F_" + std::to_string(cfg.t), gen_fan(cfg.t), {2 * t + 1, y, z, 1, 1, w});

  std::vector<Table1Row> rows;
  for (auto& source : sources) {
    Table1Row r;
    r.name = source.name;
    r.graph6 = to_graph6(source.graph);
    r.computed = computed_row(source.graph);
    r.expected = source.expected;
    r.printed = source.printed;
    for (std::size_t k = 0; k < 6; ++k) {
      const double err = std::abs(r.computed[k] - r.expected[k]);
      r.max_error = std::isnan(err) ? INFINITY : std::max(r.max_error, err);
      if (!(std::abs(r.computed[k] - r.printed[k]) <= tol)) r.printed_deviations.emplace_back(kTable1Columns[k]);
    }
    r.matches = r.max_error <= tol;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace lapspread
