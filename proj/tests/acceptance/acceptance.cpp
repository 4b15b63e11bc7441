// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lapspread/certify.hpp"
#include "lapspread/families.hpp"
#include "lapspread/graph6.hpp"
#include "lapspread/params.hpp"
#include "lapspread/spectral.hpp"
#include "lapspread/sweep.hpp"

using namespace lapspread;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<Graph> named_suite() {
  std::vector<Graph> out;
  for (auto g : {NamedGraph::X8, NamedGraph::X8c, NamedGraph::Y8, NamedGraph::Z8, NamedGraph::U8, NamedGraph::U8c}) {
    out.push_back(gen_named(g));
  }
  out.push_back(gen_cycle(5));
  out.push_back(gen_petersen());
  out.push_back(gen_complete_bipartite(3, 3));
  out.push_back(gen_kn_minus_cycles(CyclePartition({3, 3, 3})));
  out.push_back(gen_complete_bipartite(2, 5));
  out.push_back(gen_fan(3));
  return out;
}

std::vector<Graph> random_suite(const SweepConfig& cfg) {
  std::vector<Graph> out;
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    if (auto g = sample_graph(cfg, k)) out.push_back(std::move(*g));
  }
  return out;
}

bool is_main_inequality_check(const std::string& name) {
  return name.starts_with("maineq") || name.starts_with("vertex_quadratic");
}

Outcome table1_reproduction() {
  Outcome o;
  double worst = 0.0;
  std::vector<std::string> deviations;
  for (const auto& r : table1()) {
    worst = std::max(worst, r.max_error);
    if (!r.matches) {
      o.ok = false;
      o.detail += r.name + " mismatch; ";
    }
    for (const auto& c : r.printed_deviations) deviations.push_back(r.name + "." + c);
  }
  std::ostringstream s;
  s << "8 rows, max error " << worst;
  for (const auto& d : deviations) s << "; tabulated " << d << " differs from its closed form";
  o.detail += s.str();
  return o;
}

Outcome srg_closed_form() {
  Outcome o;
  const char* names[] = {"C5", "Petersen", "K33", "K9-3C3"};
  const Graph graphs[] = {gen_cycle(5), gen_petersen(), gen_complete_bipartite(3, 3),
                          gen_kn_minus_cycles(CyclePartition({3, 3, 3}))};
  const SrgParameters want[] = {{5, 2, 0, 1}, {10, 3, 0, 1}, {6, 3, 0, 3}, {9, 6, 3, 6}};
  const char* tight[] = {"maineq_l1", "maineq_ln1", "alpha1",     "beta1",     "spread_cor32",
                         "alpha2",    "beta2",      "spread_ee7", "spread_ee8"};
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto v = detect_srg(graphs[k]);
    if (!v.strongly_regular() || !(*v.params == want[k])) {
      o.ok = false;
      o.detail += std::string(names[k]) + " parameters wrong; ";
      continue;
    }
    const auto [l1, ln1] = srg_eigenvalues(*v.params);
    const auto s = laplacian_spectrum(graphs[k]);
    worst = std::max({worst, std::abs(l1 - s.values.front()), std::abs(ln1 - s.values[s.size() - 2])});
    const auto c = certify_graph(graphs[k]);
    for (const char* b : tight) {
      if (!c.tight(b)) {
        o.ok = false;
        o.detail += std::string(names[k]) + " not tight on " + b + "; ";
      }
    }
  }
  if (worst > 1e-9) o.ok = false;
  std::ostringstream s;
  s << "4 graphs, max eigenvalue error " << worst << ", 9 equalities each";
  o.detail += s.str();
  return o;
}

struct SweepBundle {
  SweepResult random;
  SweepResult named;
};

Outcome master_check(const SweepBundle& b) {
  Outcome o;
  std::size_t bad = 0;
  for (const auto* r : {&b.random, &b.named}) {
    bad += std::count_if(r->violations.begin(), r->violations.end(),
                         [](const Violation& v) { return is_main_inequality_check(v.bound); });
  }
  const std::size_t bicond = b.random.biconditional_failures.size() + b.named.biconditional_failures.size();
  o.ok = bad == 0 && bicond == 0 && b.random.graphs_tested == 500;
  std::ostringstream s;
  s << b.random.graphs_tested << " random + " << b.named.graphs_tested << " named graphs, " << bad
    << " inequality violations, " << bicond << " biconditional failures";
  o.detail = s.str();
  return o;
}

Outcome bound_validity(const SweepBundle& b) {
  Outcome o;
  std::size_t bad = 0;
  for (const auto& v : b.random.violations) {
    if (!is_main_inequality_check(v.bound)) {
      ++bad;
      if (o.detail.size() < 200) o.detail += v.graph6 + ":" + v.bound + "; ";
    }
  }
  o.ok = bad == 0 && b.random.graphs_tested == 500;
  o.detail += std::to_string(b.random.graphs_tested) + " graphs, " + std::to_string(bad) + " bound violations";
  return o;
}

Outcome partitions() {
  const auto r = partition_sweep(6, 12);
  Outcome o;
  o.ok = r.passed();
  std::size_t claimed = 0;
  for (const auto& p : r.partitions) claimed += p.extremal_claim;
  std::ostringstream s;
  s << r.partitions.size() << " partitions, " << claimed << " extremal claims confirmed, "
    << r.printed_deviations.size() << " printed-formula deviations:";
  for (const auto& d : r.printed_deviations) s << " " << d;
  o.detail = s.str();
  return o;
}

Outcome numerical_core(const std::vector<Graph>& suite) {
  double residual = 0.0, gram = 0.0, trace = 0.0, duality = 0.0;
  bool round_trip = true;
  for (const auto& g : suite) {
    const std::size_t n = g.order();
    const auto l = laplacian(g);
    const auto s = laplacian_spectrum(g);
    const double scale = std::max(1.0, l.frobenius_norm());
    for (std::size_t k = 0; k < n; ++k) {
      residual = std::max(residual, eigen_residual(l, s.values[k], s.vectors[k]) / scale);
      for (std::size_t j = k; j < n; ++j) {
        gram = std::max(gram, std::abs(dot(s.vectors[k], s.vectors[j]) - (j == k ? 1.0 : 0.0)));
      }
    }
    double sum = 0.0, sum_sq = 0.0, deg_sq = 0.0;
    for (double v : s.values) {
      sum += v;
      sum_sq += v * v;
    }
    for (Vertex v = 0; v < n; ++v) deg_sq += static_cast<double>(g.degree(v) * g.degree(v));
    const double m = static_cast<double>(g.size());
    trace = std::max({trace, std::abs(sum - 2 * m) / scale, std::abs(sum_sq - deg_sq - 2 * m) / (scale * scale)});
    if (n >= 2 && g.size() < n * (n - 1) / 2) {
      const auto sc = laplacian_spectrum(complement(g));
      for (std::size_t k = 0; k + 1 < n; ++k) {
        duality = std::max(duality, std::abs(sc.values[k] - (n - s.values[n - 2 - k])) / scale);
      }
    }
    round_trip = round_trip && from_graph6(to_graph6(g)) == g;
  }
  Outcome o;
  o.ok = residual <= 1e-9 && gram <= 1e-9 && trace <= 1e-9 && duality <= 1e-9 && round_trip;
  std::ostringstream s;
  s << suite.size() << " graphs, residual " << residual << ", gram " << gram << ", trace " << trace
    << ", duality " << duality << ", graph6 round trip " << (round_trip ? "ok" : "broken");
  o.detail = s.str();
  return o;
}

bool report(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = o.ok && secs < limit_seconds;
  std::printf("%s %d %s (%.3f s, limit %.0f s): %s\n", ok ? "PASS" : "FAIL", id, title, secs, limit_seconds,
              o.detail.c_str());
  return ok;
}

}  // namespace

int main() {
  const SweepConfig cfg;
  SweepBundle bundle;
  double sweep_seconds = 0.0;
  auto run_sweep = [&] {
    const auto start = std::chrono::steady_clock::now();
    bundle.random = validity_sweep(cfg);
    const auto named = named_suite();
    bundle.named = analyze_graphs(named, cfg);
    sweep_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  bool all = true;
  all &= report(1, "table1 reproduction", 1, table1_reproduction);
  all &= report(2, "strongly regular closed forms", 1, srg_closed_form);
  all &= report(3, "main inequality and equality biconditional", 30, [&] {
    run_sweep();
    return master_check(bundle);
  });
  all &= report(4, "bound validity sweep", 30 - sweep_seconds, [&] { return bound_validity(bundle); });
  all &= report(5, "cycle-partition family sweep", 10, partitions);
  all &= report(6, "numerical core soundness", 10, [&] {
    auto suite = random_suite(cfg);
    for (auto& g : named_suite()) suite.push_back(std::move(g));
    return numerical_core(suite);
  });
  return all ? 0 : 1;
}
