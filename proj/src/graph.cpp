#include "lapspread/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <sstream>

namespace lapspread {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_order(std::size_t n) {
  if (n == 0) throw std::invalid_argument("graph order must be at least 1");
}

// Connectivity of the subgraph induced by `alive` (single-word rows, n <= 64).
bool induced_connected(const Graph& g, std::uint64_t alive) {
  if (alive == 0) return true;
  std::uint64_t seen = alive & (~alive + 1);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    while (frontier != 0) {
      const auto v = static_cast<Vertex>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      next |= g.row(v)[0];
    }
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {
  check_order(n);
}

Graph::Graph(std::size_t n, std::vector<std::uint64_t> bits)
    : n_(n), words_(words_for(n)), bits_(std::move(bits)) {}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [i, j] : edges) b.add_edge(i, j);
  return b.build();
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<Vertex>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j : neighbors(i)) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {
  check_order(n);
}

GraphBuilder& GraphBuilder::add_edge(Vertex i, Vertex j) {
  if (i >= n_ || j >= n_) {
    throw std::invalid_argument("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") out of range for order " + std::to_string(n_));
  }
  if (i == j) throw std::invalid_argument("loop at vertex " + std::to_string(i));
  bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  return *this;
}

bool GraphBuilder::has_edge(Vertex i, Vertex j) const {
  return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
}

Graph GraphBuilder::build() const { return Graph(n_, bits_); }

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j = i + 1; j < g.order(); ++j) {
      if (!g.adjacent(i, j)) b.add_edge(i, j);
    }
  }
  return b.build();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> label(n, -1);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(comps.size());
    std::vector<Vertex> comp{s};
    label[s] = id;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex u : g.neighbors(comp[head])) {
        if (label[u] < 0) {
          label[u] = id;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

std::size_t common_neighbors(const Graph& g, Vertex i, Vertex j) {
  if (i == j) throw std::invalid_argument("common_neighbors requires distinct vertices");
  const auto a = g.row(i);
  const auto b = g.row(j);
  std::size_t count = 0;
  for (std::size_t w = 0; w < a.size(); ++w) {
    count += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  }
  return count;
}

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("vertex connectivity needs at least 2 vertices");
  if (n > kMaxConnectivityOrder) {
    throw std::domain_error("vertex connectivity limited to order " +
                            std::to_string(kMaxConnectivityOrder));
  }
  if (!is_connected(g)) throw std::invalid_argument("vertex connectivity of a disconnected graph");
  if (g.is_complete()) return n - 1;

  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    // Gosper's hack over all k-subsets of {0..n-1}.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while ((s & ~all) == 0) {
      if (!induced_connected(g, all & ~s)) return k;
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  // A non-complete graph always has a separator of size n - 2.
  return n - 2;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  for (const auto& [i, j] : a.edges()) out.add_edge(i, j);
  for (const auto& [i, j] : b.edges()) out.add_edge(i + a.order(), j + a.order());
  return out.build();
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  bool have_order = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long a = 0;
    if (!(fields >> a)) {
      std::string rest;
      fields.clear();
      if (fields >> rest) throw ParseError("edge list line " + std::to_string(lineno) + ": expected integer");
      continue;
    }
    if (!have_order) {
      std::string extra;
      if (a < 1 || (fields >> extra)) {
        throw ParseError("edge list line " + std::to_string(lineno) + ": expected vertex count n >= 1");
      }
      n = static_cast<std::size_t>(a);
      have_order = true;
      continue;
    }
    long long b = 0;
    std::string extra;
    if (!(fields >> b) || (fields >> extra)) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"i j\"");
    }
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": vertex out of range");
    }
    if (a == b) throw ParseError("edge list line " + std::to_string(lineno) + ": loop");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_order) throw ParseError("edge list is empty");
  return Graph::from_edge_list(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
  return out.str();
}

}  // namespace lapspread
