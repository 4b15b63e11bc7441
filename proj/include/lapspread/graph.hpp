#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lapspread {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when textual graph input (graph6, edge lists, family strings)
/// cannot be decoded.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two distinct vertices together with their adjacency status.
struct VertexPair {
  Vertex i = 0;
  Vertex j = 0;
  bool adjacent = false;
};

/// Immutable simple undirected graph on the dense labels 0..n-1.
///
/// Adjacency is stored as one bit row per vertex (64-bit words), so
/// neighbourhood intersections reduce to popcounts. Construct through
/// Graph::from_edge_list or GraphBuilder.
class Graph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Graph(std::size_t n);

  /// Duplicate edges (in either orientation) collapse to one.
  /// Throws std::invalid_argument on loops, out-of-range endpoints or n == 0.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t size() const;

  bool adjacent(Vertex i, Vertex j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges (i, j) with i < j, ordered by i then j.
  std::vector<Edge> edges() const;

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + v * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  bool is_complete() const { return size() == n_ * (n_ - 1) / 2; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  Graph(std::size_t n, std::vector<std::uint64_t> bits);

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for a Graph; the only way to set bits directly.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t order() const { return n_; }
  GraphBuilder& add_edge(Vertex i, Vertex j);
  bool has_edge(Vertex i, Vertex j) const;
  Graph build() const;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

Graph complement(const Graph& g);

/// Breadth-first reachability from vertex 0.
bool is_connected(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// |N(i) ∩ N(j)|; equals the (i, j) entry of A² for i != j.
std::size_t common_neighbors(const Graph& g, Vertex i, Vertex j);

/// Largest order accepted by vertex_connectivity.
inline constexpr std::size_t kMaxConnectivityOrder = 64;

/// Minimum vertex cut size, with kappa(K_n) = n - 1.
///
/// Exhaustive search over candidate separators in increasing size, so the
/// cost grows like 2^n for highly connected graphs. Intended for the small
/// graphs (n <= 16) this library analyses; requires n <= 64.
std::size_t vertex_connectivity(const Graph& g);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Reads the edge-list text format: a line holding n, then "i j" lines
/// (0-indexed). Blank lines and '#' comments are ignored.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

}  // namespace lapspread
