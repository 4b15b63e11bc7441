#include "lapspread/families.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lapspread/params.hpp"
#include "lapspread/spectral.hpp"

namespace lapspread {

namespace {

// Figure transcriptions, 1-indexed as drawn.
constexpr Edge kX8Edges[] = {{1, 2}, {2, 3}, {3, 1}, {4, 7}, {7, 5}, {5, 8},
                             {8, 6}, {6, 7}, {4, 8}, {2, 4}, {1, 5}, {3, 6}};
constexpr Edge kU8Edges[] = {{1, 2}, {3, 4}, {4, 5}, {5, 3}, {6, 7}, {7, 8}, {8, 6}, {1, 3},
                             {1, 4}, {1, 5}, {2, 8}, {2, 7}, {2, 6}, {8, 3}, {4, 7}, {6, 5}};

Graph from_one_indexed(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [i, j] : edges) b.add_edge(i - 1, j - 1);
  return b.build();
}

struct Fingerprint {
  std::int64_t degree;
  std::int64_t lambda;
  std::int64_t mu;
  double ell1;
  double ell_n_minus_1;
};

Fingerprint expected_fingerprint(NamedGraph which) {
  const double r17 = std::sqrt(17.0);
  const double r5 = std::sqrt(5.0);
  switch (which) {
    case NamedGraph::X8: return {3, 0, 1, (7 + r17) / 2, (7 - r17) / 2};
    case NamedGraph::X8c: return {4, 1, 2, (9 + r17) / 2, (9 - r17) / 2};
    case NamedGraph::Y8: return {5, 2, 4, 8, 4};
    case NamedGraph::Z8: return {5, 2, 4, 8, (11 - r5) / 2};
    case NamedGraph::U8: return {4, 0, 2, 6, 2};
    case NamedGraph::U8c: return {3, 0, 0, 6, 2};
  }
  throw std::logic_error("unknown named graph");
}

void verify_fingerprint(NamedGraph which, const Graph& g) {
  const auto want = expected_fingerprint(which);
  const auto p = structural_params(g);
  const auto s = laplacian_spectrum(g);
  const bool ok = g.order() == 8 && p.regular() && p.max_degree == want.degree && p.lambda_g == want.lambda &&
                  p.mu_g == want.mu && std::abs(s.values[0] - want.ell1) <= 1e-9 &&
                  std::abs(s.values[6] - want.ell_n_minus_1) <= 1e-9;
  if (!ok) throw std::logic_error("fingerprint mismatch for " + std::string(to_string(which)));
}

std::size_t parse_count(std::string_view text, std::string_view family) {
  std::size_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ParseError("family \"" + std::string(family) + "\": bad integer \"" + std::string(text) + "\"");
  }
  return v;
}

std::vector<std::size_t> parse_counts(std::string_view text, std::string_view family) {
  std::vector<std::size_t> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_count(text.substr(0, comma), family));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string_view to_string(NamedGraph g) {
  switch (g) {
    case NamedGraph::X8: return "X8";
    case NamedGraph::X8c: return "X8c";
    case NamedGraph::Y8: return "Y8";
    case NamedGraph::Z8: return "Z8";
    case NamedGraph::U8: return "U8";
    case NamedGraph::U8c: return "U8c";
  }
  return "unknown";
}

Graph gen_named(NamedGraph which) {
  Graph g = [which] {
    switch (which) {
      case NamedGraph::X8: return from_one_indexed(8, kX8Edges);
      case NamedGraph::X8c: return complement(from_one_indexed(8, kX8Edges));
      case NamedGraph::Y8: return gen_kn_minus_cycles(CyclePartition({4, 4}));
      case NamedGraph::Z8: return gen_kn_minus_cycles(CyclePartition({5, 3}));
      case NamedGraph::U8: return from_one_indexed(8, kU8Edges);
      case NamedGraph::U8c: return complement(from_one_indexed(8, kU8Edges));
    }
    throw std::logic_error("unknown named graph");
  }();
  verify_fingerprint(which, g);
  return g;
}

Graph gen_complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
  }
  return b.build();
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph gen_path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph gen_star(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 1; i < n; ++i) b.add_edge(0, i);
  return b.build();
}

Graph gen_petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return b.build();
}

Graph gen_complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite graph needs a, b >= 1");
  GraphBuilder g(a + b);
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = a; j < a + b; ++j) g.add_edge(i, j);
  }
  return g.build();
}

Graph gen_fan(std::size_t t) {
  if (t < 2) throw std::invalid_argument("fan F_t needs t >= 2");
  const std::size_t hub = 2 * t;
  GraphBuilder b(2 * t + 1);
  for (Vertex k = 0; k < t; ++k) {
    b.add_edge(2 * k, 2 * k + 1);
    b.add_edge(2 * k, hub);
    b.add_edge(2 * k + 1, hub);
  }
  return b.build();
}

CyclePartition::CyclePartition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("cycle partition is empty");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  if (parts_.back() < 3) throw std::invalid_argument("cycle partition parts must be at least 3");
  for (auto s : parts_) order_ += s;
}

bool CyclePartition::all_triangles() const {
  return std::all_of(parts_.begin(), parts_.end(), [](std::size_t s) { return s == 3; });
}

bool CyclePartition::all_odd() const {
  return std::all_of(parts_.begin(), parts_.end(), [](std::size_t s) { return s % 2 == 1; });
}

std::string CyclePartition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

std::vector<CyclePartition> cycle_partitions(std::size_t n) {
  std::vector<CyclePartition> out;
  std::vector<std::size_t> current;
  // Parts are chosen nonincreasingly; `cap` bounds the next part.
  auto recurse = [&](auto&& self, std::size_t remaining, std::size_t cap) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t s = std::min(cap, remaining); s >= 3; --s) {
      const std::size_t rest = remaining - s;
      if (rest != 0 && rest < 3) continue;
      current.push_back(s);
      self(self, rest, s);
      current.pop_back();
    }
  };
  if (n >= 3) recurse(recurse, n, n);
  return out;
}

Graph gen_kn_minus_cycles(const CyclePartition& p) {
  const std::size_t n = p.order();
  if (n < 5) throw std::invalid_argument("K_n minus cycles is disconnected for n < 5");
  GraphBuilder cycles(n);
  std::size_t base = 0;
  for (auto s : p.parts()) {
    for (std::size_t k = 0; k < s; ++k) cycles.add_edge(base + k, base + (k + 1) % s);
    base += s;
  }
  return complement(cycles.build());
}

FamilyPrediction predict_family(const CyclePartition& p) {
  const auto n = static_cast<std::int64_t>(p.order());
  const double nd = static_cast<double>(n);
  const double pi = std::numbers::pi;
  FamilyPrediction f;
  if (n == 5) {
    // K_5 - C_5 = C_5, strongly regular (5, 2, 0, 1).
    f.lambda_g = 0;
    f.mu_g = 1;
    f.srg = true;
    f.ell1 = f.ell1_as_printed = (5.0 + std::sqrt(5.0)) / 2.0;
    f.ell_n_minus_1 = (5.0 - std::sqrt(5.0)) / 2.0;
    return f;
  }
  if (n < 6) throw std::invalid_argument("predict_family needs n >= 6 (or the 5-cycle)");

  f.lambda_g = n - 6;
  f.srg = p.all_triangles();
  f.mu_g = f.srg ? n - 3 : n - 4;
  if (f.srg) {
    f.ell1 = f.ell1_as_printed = nd;
    f.ell_n_minus_1 = nd - 3.0;
    return f;
  }
  const auto largest = static_cast<double>(p.parts().front());
  if (p.count() == 1) {
    f.ell1 = nd - cycle_spectrum(p.order()).ell_s_minus_1;
    f.ell1_as_printed = nd - std::cos(2.0 * pi / nd);
  } else {
    f.ell1 = f.ell1_as_printed = nd;
  }
  f.ell_n_minus_1 = p.all_odd() ? nd - 2.0 - 2.0 * std::cos(pi / largest) : nd - 4.0;
  f.alpha = nd;
  f.beta = nd - 4.0;
  return f;
}

CycleSpectrum cycle_spectrum(std::size_t s) {
  if (s < 3) throw std::invalid_argument("cycle_spectrum needs s >= 3");
  const double sd = static_cast<double>(s);
  const double pi = std::numbers::pi;
  CycleSpectrum c;
  c.ell1 = s % 2 == 0 ? 4.0 : 2.0 + 2.0 * std::cos(pi / sd);
  c.ell_s_minus_1 = 2.0 - 2.0 * std::cos(2.0 * pi / sd);
  c.ell_s_minus_1_printed = 2.0 - std::cos(2.0 * pi / sd);
  return c;
}

Graph parse_family(std::string_view family) {
  static constexpr NamedGraph kNamed[] = {NamedGraph::X8, NamedGraph::X8c, NamedGraph::Y8,
                                          NamedGraph::Z8, NamedGraph::U8,  NamedGraph::U8c};
  for (auto which : kNamed) {
    if (family == to_string(which)) return gen_named(which);
  }
  if (family == "petersen") return gen_petersen();

  const auto colon = family.find(':');
  if (colon == std::string_view::npos) throw ParseError("unknown family \"" + std::string(family) + "\"");
  const auto kind = family.substr(0, colon);
  const auto args = parse_counts(family.substr(colon + 1), family);
  auto want_args = [&](std::size_t count) {
    if (args.size() != count) {
      throw ParseError("family \"" + std::string(family) + "\": expected " + std::to_string(count) + " argument(s)");
    }
  };
  try {
    if (kind == "K") return want_args(1), gen_complete(args[0]);
    if (kind == "C") return want_args(1), gen_cycle(args[0]);
    if (kind == "P") return want_args(1), gen_path(args[0]);
    if (kind == "star") return want_args(1), gen_star(args[0]);
    if (kind == "Kab") return want_args(2), gen_complete_bipartite(args[0], args[1]);
    if (kind == "fan") return want_args(1), gen_fan(args[0]);
    if (kind == "KnC") return gen_kn_minus_cycles(CyclePartition(args));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError("family \"" + std::string(family) + "\": " + e.what());
  }
  throw ParseError("unknown family \"" + std::string(family) + "\"");
}

}  // namespace lapspread
