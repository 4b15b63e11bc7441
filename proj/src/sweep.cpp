#include "lapspread/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "lapspread/bounds.hpp"
#include "lapspread/certify.hpp"
#include "lapspread/graph6.hpp"
#include "lapspread/params.hpp"
#include "lapspread/rng.hpp"
#include "lapspread/spectral.hpp"

namespace lapspread {

Graph random_connected(std::size_t n, double p, std::uint64_t seed, std::size_t budget) {
  if (n < 2) throw std::invalid_argument("random_connected needs n >= 2");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("random_connected needs 0 < p < 1");
  Xoshiro256ss rng(seed);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    GraphBuilder b(n);
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (rng.uniform() < p) b.add_edge(i, j);
      }
    }
    auto g = b.build();
    if (is_connected(g)) return g;
  }
  throw RejectionBudgetExceeded("no connected G(" + std::to_string(n) + ", " + std::to_string(p) + ") sample in " +
                                std::to_string(budget) + " attempts");
}

Graph random_connected_m(std::size_t n, std::size_t m, std::uint64_t seed, std::size_t budget) {
  const std::size_t pairs = n * (n - 1) / 2;
  if (n < 2 || m + 1 < n || m > pairs) throw std::invalid_argument("random_connected_m needs n - 1 <= m <= n(n-1)/2");
  std::vector<Edge> all;
  all.reserve(pairs);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) all.emplace_back(i, j);
  }
  Xoshiro256ss rng(seed);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    for (std::size_t k = 0; k < m; ++k) std::swap(all[k], all[k + rng.below(pairs - k)]);
    auto g = Graph::from_edge_list(n, std::span<const Edge>(all.data(), m));
    if (is_connected(g)) return g;
  }
  throw RejectionBudgetExceeded("no connected sample with " + std::to_string(m) + " edges in " +
                                std::to_string(budget) + " attempts");
}

void SweepConfig::validate() const {
  if (n_min < 2 || n_min > n_max) throw std::invalid_argument("sweep needs 2 <= n_min <= n_max");
  if (samples == 0) throw std::invalid_argument("sweep needs at least one sample");
  if (!uniform_edge_count) {
    if (edge_probabilities.empty()) throw std::invalid_argument("sweep needs at least one edge probability");
    for (double p : edge_probabilities) {
      if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("edge probabilities must lie in (0, 1)");
    }
  }
}

bool SweepResult::passed() const {
  if (!violations.empty() || !biconditional_failures.empty()) return false;
  return std::all_of(partitions.begin(), partitions.end(), [](const PartitionRow& r) {
    return r.params_match && r.spectrum_match && r.alpha_beta_match && (!r.extremal_claim || r.extremal_confirmed);
  });
}

namespace {

bool is_classical(std::string_view name) {
  static constexpr std::string_view kClassical[] = {"anderson_morley", "merris",        "rojo",
                                                    "li_pan",          "zhang",         "grone_merris",
                                                    "fiedler_delta",   "fiedler_kappa"};
  return std::find(std::begin(kClassical), std::end(kClassical), name) != std::end(kClassical);
}

double scaled(double tol, double magnitude) { return tol * std::max(1.0, std::abs(magnitude)); }

}  // namespace

void check_graph(const Graph& g, const SweepConfig& cfg, SweepResult& out, bool keep_verdict) {
  const std::size_t n = g.order();
  const auto g6 = to_graph6(g);
  const auto p = structural_params(g);
  const auto s = laplacian_spectrum(g);
  const double ell1 = s.values.front();
  const double ell_n1 = s.values[n - 2];
  const double vtol = cfg.validity_tolerance;
  const std::size_t before = out.violations.size();

  auto check = [&](std::string name, double lhs, double rhs, double tol) {
    if (lhs > rhs + tol) out.violations.push_back({g6, std::move(name), lhs, rhs, rhs - lhs});
  };

  const auto lam = static_cast<double>(*p.lambda_g);
  const double mu = p.mu_g ? static_cast<double>(*p.mu_g) : 0.0;
  const std::pair<std::string, LambdaMu> choices[] = {
      {"[lambda_g,mu_g]", {lam, mu}}, {"[0,0]", {0.0, 0.0}}, {"[lambda_g,0]", {lam, 0.0}}};

  for (std::size_t c = 0; c < std::size(choices); ++c) {
    const auto& [tag, lm] = choices[c];
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const auto& x = s.vectors[k];
      const double ell = s.values[k];
      check("maineq" + tag, main_inequality_lhs(g, p, lm, ell, x), 0.0, main_inequality_tolerance(p, x));
      double lowest = INFINITY;
      for (Vertex i = 0; i < n; ++i) lowest = std::min(lowest, vertex_quadratic(p, i, lm, ell));
      check("vertex_quadratic" + tag, lowest, 0.0, scaled(vtol, ell * ell));
    }

    const auto bounds = compute_bounds(g, p, lm);
    for (const auto& e : entries(bounds)) {
      if (!e.bound->defined() || (c > 0 && is_classical(e.name))) continue;
      const double v = *e.bound->value;
      const double attained = e.target == Target::laplacian_index          ? ell1
                              : e.target == Target::algebraic_connectivity ? ell_n1
                                                                           : ell1 - ell_n1;
      const std::string name = is_classical(e.name) ? std::string(e.name) : std::string(e.name) + tag;
      if (e.sense == Sense::upper) {
        check(name, attained, v, scaled(vtol, v));
      } else {
        check(name, v, attained, scaled(vtol, v));
      }
    }
    if (c == 0 && bounds.fiedler_kappa.defined() && bounds.fiedler_delta.defined()) {
      check("kappa_le_delta", *bounds.fiedler_kappa.value, *bounds.fiedler_delta.value, 0.0);
    }
  }

  for (Vertex i = 0; i < n; ++i) {
    const double lp = li_pan_vertex(p, i);
    check("zhang_le_li_pan@" + std::to_string(i), zhang_vertex(p, i), lp, scaled(vtol, lp));
  }

  // With μ fixed at μ(G), α₁ is expected not to grow with λ.
  std::optional<double> previous;
  for (std::int64_t l = 0; l <= *p.lambda_g; ++l) {
    const auto a = alpha1_beta1(p, {static_cast<double>(l), mu}).alpha1;
    if (!a.defined()) continue;
    if (previous && *a.value > *previous + vtol) {
      out.diagnostics.push_back(g6 + ": alpha1 increases from " + std::to_string(*previous) + " to " +
                                std::to_string(*a.value) + " at lambda = " + std::to_string(l));
    }
    previous = a.value;
  }

  const auto cert = certify_graph(g, p, s, tightest_lambda_mu(p));
  bool bicond = true;
  for (const auto& e : cert.eigenvalues) {
    for (std::size_t b = 0; b < e.basis.size(); ++b) {
      const bool tight = std::abs(e.lhs[b]) <= cfg.tightness_tolerance;
      if (tight != e.evidence[b].holds) {
        bicond = false;
        out.biconditional_failures.push_back({g6, e.basis[b], s.values[e.basis[b]], e.lhs[b], e.evidence[b].holds});
      }
    }
  }
  std::vector<std::string> tight;
  for (const auto& r : cert.rows) {
    if (r.gap && std::abs(*r.gap) <= cfg.tightness_tolerance) {
      tight.push_back(r.bound);
      out.tight_instances.push_back({g6, r.bound});
    }
  }

  ++out.graphs_tested;
  if (keep_verdict) {
    out.verdicts.push_back({g6, n, out.violations.size() - before, bicond, std::move(tight)});
  }
}

namespace {

void merge(SweepResult& into, SweepResult&& from) {
  into.graphs_tested += from.graphs_tested;
  into.skipped += from.skipped;
  auto append = [](auto& dst, auto& src) { dst.insert(dst.end(), std::make_move_iterator(src.begin()),
                                                      std::make_move_iterator(src.end())); };
  append(into.violations, from.violations);
  append(into.biconditional_failures, from.biconditional_failures);
  append(into.tight_instances, from.tight_instances);
  append(into.diagnostics, from.diagnostics);
  append(into.verdicts, from.verdicts);
  append(into.partitions, from.partitions);
  append(into.printed_deviations, from.printed_deviations);
}

template <class Work>
SweepResult run_indexed(std::size_t count, std::size_t threads, Work work) {
  std::vector<SweepResult> parts(count);
  std::size_t workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < count; k = next++) work(k, parts[k]);
      });
    }
  }
  SweepResult out;
  for (auto& r : parts) merge(out, std::move(r));
  return out;
}

}  // namespace

std::optional<Graph> sample_graph(const SweepConfig& cfg, std::size_t k) {
  Xoshiro256ss rng(derive_seed(cfg.seed, k));
  const std::size_t n = cfg.n_min + rng.below(cfg.n_max - cfg.n_min + 1);
  const std::uint64_t graph_seed = rng();
  try {
    if (cfg.uniform_edge_count) {
      const std::size_t lo = n - 1;
      const std::size_t hi = n * (n - 1) / 2;
      return random_connected_m(n, lo + rng.below(hi - lo + 1), graph_seed);
    }
    return random_connected(n, cfg.edge_probabilities[k % cfg.edge_probabilities.size()], graph_seed);
  } catch (const RejectionBudgetExceeded&) {
    return std::nullopt;
  }
}

SweepResult validity_sweep(const SweepConfig& cfg) {
  cfg.validate();
  return run_indexed(cfg.samples, cfg.threads, [&cfg](std::size_t k, SweepResult& out) {
    const auto g = sample_graph(cfg, k);
    if (!g) {
      ++out.skipped;
      return;
    }
    check_graph(*g, cfg, out);
  });
}

SweepResult analyze_graphs(std::span<const Graph> graphs, const SweepConfig& cfg) {
  return run_indexed(graphs.size(), cfg.threads, [&](std::size_t k, SweepResult& out) {
    const auto& g = graphs[k];
    if (g.order() < 2 || !is_connected(g)) {
      ++out.skipped;
      return;
    }
    check_graph(g, cfg, out, true);
  });
}

SweepResult partition_sweep(std::size_t n_min, std::size_t n_max) {
  if (n_min < 6 || n_min > n_max || n_max > 13) throw std::invalid_argument("partition_sweep needs 6 <= n_min <= n_max <= 13");
  std::vector<CyclePartition> all;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    for (auto& part : cycle_partitions(n)) all.push_back(std::move(part));
  }

  static constexpr std::string_view kClaimed[] = {"maineq_l1", "maineq_ln1", "alpha1",    "beta1",
                                                  "spread_cor32", "alpha2", "beta2", "spread_ee7"};
  const SweepConfig cfg;
  constexpr double tol = 1e-9;
  return run_indexed(all.size(), 0, [&](std::size_t k, SweepResult& out) {
    const auto& part = all[k];
    const auto g = gen_kn_minus_cycles(part);
    const auto p = structural_params(g);
    const auto s = laplacian_spectrum(g);
    const std::size_t n = g.order();

    PartitionRow r;
    r.partition = "(" + part.to_string() + ")";
    r.n = n;
    r.t = part.count();
    r.graph6 = to_graph6(g);
    r.predicted = predict_family(part);
    r.lambda_g = *p.lambda_g;
    r.mu_g = *p.mu_g;
    r.srg = detect_srg(g).strongly_regular();
    r.ell1 = s.values.front();
    r.ell_n_minus_1 = s.values[n - 2];
    r.params_match = r.lambda_g == r.predicted.lambda_g && r.mu_g == r.predicted.mu_g && r.srg == r.predicted.srg;
    r.spectrum_match = std::abs(r.ell1 - r.predicted.ell1) <= tol &&
                       std::abs(r.ell_n_minus_1 - r.predicted.ell_n_minus_1) <= tol;

    const auto lm = tightest_lambda_mu(p);
    const auto b = compute_bounds(g, p, lm);
    r.alpha1 = b.alpha1.value;
    r.alpha2 = b.alpha2.value;
    r.beta1 = b.beta1.value;
    r.beta2 = b.beta2.value;
    auto near = [&](const std::optional<double>& v, const std::optional<double>& want) {
      return v && want && std::abs(*v - *want) <= tol;
    };
    r.alpha_beta_match = !r.predicted.alpha || (near(r.alpha1, r.predicted.alpha) &&
                                                near(r.alpha2, r.predicted.alpha) &&
                                                near(r.beta1, r.predicted.beta) && near(r.beta2, r.predicted.beta));
    r.printed_ell1_deviates = std::abs(r.predicted.ell1_as_printed - r.ell1) > tol;
    if (r.printed_ell1_deviates) {
      out.printed_deviations.push_back(r.partition + ": l1 computed " + std::to_string(r.ell1) + ", closed form n - cos(2pi/n) gives " +
                                       std::to_string(r.predicted.ell1_as_printed));
    }

    const auto cert = certify_graph(g, p, s, lm);
    r.tight_bounds = cert.tight_bounds();
    r.extremal_claim = part.count() >= 2 && part.has_even_part();
    r.extremal_confirmed = std::all_of(std::begin(kClaimed), std::end(kClaimed),
                                       [&](std::string_view name) { return cert.tight(name); });

    check_graph(g, cfg, out);
    out.partitions.push_back(std::move(r));
  });
}

}  // namespace lapspread
