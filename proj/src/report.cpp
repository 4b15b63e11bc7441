#include "lapspread/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "lapspread/graph6.hpp"

namespace lapspread {

double round_significant(double v, int digits) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

namespace {

Json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_significant(v);
}

Json num(const std::optional<double>& v) { return v ? num(*v) : Json(nullptr); }

Json bound_json(const Bound& b) {
  Json j;
  j["value"] = num(b.value);
  if (!b.defined()) j["reason"] = b.reason;
  return j;
}

Json lambda_mu_json(const LambdaMu& lm) { return {{"lambda", num(lm.lambda)}, {"mu", num(lm.mu)}}; }

std::string csv_number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", *v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

AnalysisReport analyze(const Graph& g) {
  AnalysisReport r;
  r.graph6 = to_graph6(g);
  r.order = g.order();
  r.size = g.size();
  r.connected = is_connected(g);
  r.spectrum = laplacian_spectrum(g);
  try {
    r.params = structural_params(g);
  } catch (const std::invalid_argument& e) {
    r.notes.emplace_back(e.what());
  }
  if (!r.connected || r.order < 2) {
    r.notes.emplace_back("graph is disconnected or trivial; bounds and certificate omitted");
    return r;
  }
  r.srg = detect_srg(g);
  const auto lm = tightest_lambda_mu(*r.params);
  if (!lm) r.notes.emplace_back("mu(G) undefined for a complete graph; parametrised bounds not applicable");
  r.bounds = compute_bounds(g, *r.params, lm);
  r.certificate = certify_graph(g, *r.params, r.spectrum, lm);
  return r;
}

Json to_json(const StructuralParams& p) {
  Json j;
  j["n"] = p.n;
  j["degrees"] = p.degrees;
  Json m = Json::array();
  for (const auto& a : p.avg2deg) m.push_back(num(a.value()));
  j["avg_2_degree"] = m;
  j["min_degree"] = p.min_degree;
  j["max_degree"] = p.max_degree;
  j["lambda_g"] = p.lambda_g ? Json(*p.lambda_g) : Json(nullptr);
  j["mu_g"] = p.mu_g ? Json(*p.mu_g) : Json(nullptr);
  j["regular"] = p.regular();
  return j;
}

Json to_json(const Spectrum& s, bool with_vectors) {
  Json j;
  Json values = Json::array();
  for (double v : s.values) values.push_back(num(v));
  j["values"] = values;
  j["sweeps"] = s.sweeps;
  j["off_diagonal_residual"] = num(s.off_diagonal_residual);
  if (with_vectors) {
    Json vecs = Json::array();
    for (const auto& v : s.vectors) {
      Json row = Json::array();
      for (double x : v) row.push_back(num(x));
      vecs.push_back(row);
    }
    j["vectors"] = vecs;
  }
  return j;
}

Json to_json(const BoundSet& b) {
  Json j;
  for (const auto& e : entries(b)) {
    auto entry = bound_json(*e.bound);
    entry["target"] = to_string(e.target);
    entry["sense"] = e.sense == Sense::upper ? "upper" : "lower";
    j[std::string(e.name)] = entry;
  }
  return j;
}

Json to_json(const SrgVerdict& v) {
  Json j;
  j["strongly_regular"] = v.strongly_regular();
  if (v.params) {
    j["parameters"] = {{"n", v.params->n}, {"k", v.params->k}, {"lambda", v.params->lambda}, {"mu", v.params->mu}};
    const auto [l1, ln1] = srg_eigenvalues(*v.params);
    j["closed_form"] = {{"l1", num(l1)}, {"l_n_minus_1", num(ln1)}};
  } else {
    j["reason"] = to_string(v.reason);
  }
  return j;
}

Json to_json(const ExtremalityCertificate& c) {
  Json j;
  j["graph6"] = c.graph6;
  j["l1"] = num(c.ell1);
  j["l_n_minus_1"] = num(c.ell_n_minus_1);
  j["spread"] = num(c.spread);
  j["lambda_mu"] = c.lambda_mu ? lambda_mu_json(*c.lambda_mu) : Json(nullptr);
  j["equality_lambda_mu"] = lambda_mu_json(c.equality_lambda_mu);
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    Json row;
    row["bound"] = r.bound;
    row["target"] = to_string(r.target);
    row["sense"] = r.sense == Sense::upper ? "upper" : "lower";
    row["value"] = num(r.value.value);
    if (!r.value.defined()) row["reason"] = r.value.reason;
    row["attained"] = num(r.attained);
    row["gap"] = num(r.gap);
    row["tight"] = r.tight;
    rows.push_back(row);
  }
  j["rows"] = rows;
  Json eig = Json::array();
  for (const auto& e : c.eigenvalues) {
    Json g;
    g["eigenvalue"] = num(e.eigenvalue);
    g["multiplicity"] = e.multiplicity;
    g["lhs_max"] = num(e.lhs_max);
    g["lhs_min"] = num(e.lhs_min);
    g["tight_some"] = e.tight_some;
    g["tight_all"] = e.tight_all;
    g["conditions_any"] = e.conditions_any;
    g["conditions_all"] = e.conditions_all;
    g["biconditional"] = e.biconditional;
    Json basis = Json::array();
    for (std::size_t b = 0; b < e.basis.size(); ++b) {
      Json pairs = Json::array();
      for (const auto& v : e.evidence[b].violating_pairs) {
        pairs.push_back({{"i", v.pair.i}, {"j", v.pair.j}, {"adjacent", v.pair.adjacent}, {"common", v.common_count}});
      }
      basis.push_back({{"index", e.basis[b]},
                       {"lhs", num(e.lhs[b])},
                       {"conditions_hold", e.evidence[b].holds},
                       {"violating_pairs", pairs}});
    }
    g["basis"] = basis;
    eig.push_back(g);
  }
  j["eigenvalues"] = eig;
  return j;
}

Json to_json(const AnalysisReport& r, bool with_vectors) {
  Json j;
  j["graph"] = {{"graph6", r.graph6}, {"order", r.order}, {"size", r.size}, {"connected", r.connected}};
  j["params"] = r.params ? to_json(*r.params) : Json(nullptr);
  j["spectrum"] = to_json(r.spectrum, with_vectors);
  j["srg"] = r.srg ? to_json(*r.srg) : Json(nullptr);
  j["bounds"] = r.bounds ? to_json(*r.bounds) : Json(nullptr);
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const std::vector<Table1Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["graph"] = r.name;
    j["graph6"] = r.graph6;
    for (const char* key : {"computed", "expected", "printed"}) {
      const auto& arr = key[0] == 'c' ? r.computed : key[0] == 'e' ? r.expected : r.printed;
      Json cols;
      for (std::size_t k = 0; k < kTable1Columns.size(); ++k) cols[std::string(kTable1Columns[k])] = num(arr[k]);
      j[key] = cols;
    }
    j["max_error"] = num(r.max_error);
    j["matches"] = r.matches;
    j["printed_deviations"] = r.printed_deviations;
    out.push_back(j);
  }
  return out;
}

Json to_json(const SweepResult& r) {
  Json j;
  j["graphs_tested"] = r.graphs_tested;
  j["skipped"] = r.skipped;
  j["passed"] = r.passed();
  Json v = Json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"graph6", x.graph6}, {"bound", x.bound}, {"lhs", num(x.lhs)}, {"rhs", num(x.rhs)}, {"gap", num(x.gap)}});
  }
  j["violations"] = v;
  Json b = Json::array();
  for (const auto& x : r.biconditional_failures) {
    b.push_back({{"graph6", x.graph6},
                 {"basis_index", x.basis_index},
                 {"eigenvalue", num(x.eigenvalue)},
                 {"lhs", num(x.lhs)},
                 {"conditions_hold", x.conditions_hold}});
  }
  j["biconditional_failures"] = b;
  Json t = Json::array();
  for (const auto& x : r.tight_instances) t.push_back({{"graph6", x.graph6}, {"bound", x.bound}});
  j["tight_instances"] = t;
  j["diagnostics"] = r.diagnostics;
  if (!r.verdicts.empty()) {
    Json vs = Json::array();
    for (const auto& x : r.verdicts) {
      vs.push_back({{"graph6", x.graph6},
                    {"order", x.order},
                    {"violations", x.violations},
                    {"biconditional", x.biconditional},
                    {"tight_bounds", x.tight_bounds}});
    }
    j["verdicts"] = vs;
  }
  if (!r.partitions.empty()) {
    Json ps = Json::array();
    for (const auto& x : r.partitions) {
      Json p;
      p["partition"] = x.partition;
      p["n"] = x.n;
      p["t"] = x.t;
      p["graph6"] = x.graph6;
      p["predicted"] = {{"lambda_g", x.predicted.lambda_g},
                        {"mu_g", x.predicted.mu_g},
                        {"srg", x.predicted.srg},
                        {"l1", num(x.predicted.ell1)},
                        {"l1_as_printed", num(x.predicted.ell1_as_printed)},
                        {"l_n_minus_1", num(x.predicted.ell_n_minus_1)},
                        {"alpha", num(x.predicted.alpha)},
                        {"beta", num(x.predicted.beta)}};
      p["computed"] = {{"lambda_g", x.lambda_g},     {"mu_g", x.mu_g},         {"srg", x.srg},
                       {"l1", num(x.ell1)},          {"l_n_minus_1", num(x.ell_n_minus_1)},
                       {"alpha1", num(x.alpha1)},    {"alpha2", num(x.alpha2)}, {"beta1", num(x.beta1)},
                       {"beta2", num(x.beta2)}};
      p["params_match"] = x.params_match;
      p["spectrum_match"] = x.spectrum_match;
      p["alpha_beta_match"] = x.alpha_beta_match;
      p["printed_l1_deviates"] = x.printed_ell1_deviates;
      p["extremal_claim"] = x.extremal_claim;
      p["extremal_confirmed"] = x.extremal_confirmed;
      p["tight_bounds"] = x.tight_bounds;
      ps.push_back(p);
    }
    j["partitions"] = ps;
    j["printed_deviations"] = r.printed_deviations;
  }
  return j;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "graph,graph6";
  for (auto c : kTable1Columns) out << ',' << c;
  out << '\n';
  for (const auto& r : rows) {
    out << csv_quote(r.name) << ',' << csv_quote(r.graph6);
    for (double v : r.computed) out << ',' << csv_number(v);
    out << '\n';
  }
  return out.str();
}

std::string certificate_csv(const std::string& graph, const ExtremalityCertificate& c, bool header) {
  std::ostringstream out;
  if (header) out << "graph,bound,value,attained,tight,gap\n";
  for (const auto& r : c.rows) {
    out << csv_quote(graph) << ',' << r.bound << ',' << csv_number(r.value.value) << ',' << csv_number(r.attained)
        << ',' << (r.tight ? "true" : "false") << ',' << csv_number(r.gap) << '\n';
  }
  return out.str();
}

}  // namespace lapspread
