#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lapspread/bounds.hpp"
#include "lapspread/certify.hpp"
#include "lapspread/graph.hpp"
#include "lapspread/params.hpp"
#include "lapspread/spectral.hpp"
#include "lapspread/sweep.hpp"

namespace lapspread {

using Json = nlohmann::ordered_json;

/// v rounded to `digits` significant decimal digits. Non-finite values are
/// returned unchanged.
double round_significant(double v, int digits = 12);

struct AnalysisReport {
  std::string graph6;
  std::size_t order = 0;
  std::size_t size = 0;
  bool connected = false;
  Spectrum spectrum;
  std::optional<StructuralParams> params;
  std::optional<SrgVerdict> srg;
  std::optional<BoundSet> bounds;
  std::optional<ExtremalityCertificate> certificate;
  /// Why params, bounds or certificate are missing.
  std::vector<std::string> notes;
};

/// Builds the full report. A disconnected graph gets spectrum and identity
/// only (plus structural parameters when no vertex is isolated).
AnalysisReport analyze(const Graph& g);

Json to_json(const StructuralParams& p);
Json to_json(const Spectrum& s, bool with_vectors);
Json to_json(const BoundSet& b);
Json to_json(const SrgVerdict& v);
Json to_json(const ExtremalityCertificate& c);
Json to_json(const AnalysisReport& r, bool with_vectors = false);
Json to_json(const std::vector<Table1Row>& rows);
Json to_json(const SweepResult& r);

/// Header `graph,graph6,l1,alpha1,alpha2,l_n_minus_1,beta1,beta2` and one
/// line per row of computed values.
std::string table1_csv(const std::vector<Table1Row>& rows);

/// One record per bound: `graph,bound,value,attained,tight,gap`.
std::string certificate_csv(const std::string& graph, const ExtremalityCertificate& c, bool header = true);

}  // namespace lapspread
