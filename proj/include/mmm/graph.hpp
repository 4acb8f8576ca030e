#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mmm {

using Vertex = std::uint32_t;

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

using Matching = std::vector<Edge>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> vertices);

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t num_vertices);
  /// Throws InvalidArgument on self-loops, out-of-range endpoints or duplicate edges.
  Graph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;
  /// Position of the edge in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && num_vertices() == other.num_vertices(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Bipartite graph: vertices [0, left_size) on the left, [left_size, left_size + right_size) on the right.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// Edges are given as (left index, right index) pairs.
  BipartiteGraph(std::size_t left_size, std::size_t right_size,
                 const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t left_size() const { return left_size_; }
  std::size_t right_size() const { return right_size_; }
  Vertex left(std::size_t i) const { return static_cast<Vertex>(i); }
  Vertex right(std::size_t j) const { return static_cast<Vertex>(left_size_ + j); }
  bool has_edge(std::size_t i, std::size_t j) const { return graph_.adjacent(left(i), right(j)); }
  const Graph& graph() const { return graph_; }

 private:
  std::size_t left_size_ = 0;
  std::size_t right_size_ = 0;
  Graph graph_;
};

struct CoverCheck {
  bool ok = true;
  std::optional<Edge> uncovered;  // first edge (in edge order) with no endpoint in the set
};

CoverCheck verify_vertex_cover(const Graph& graph, std::span<const Vertex> vertex_set);

/// True iff the edges are pairwise disjoint and all present in the graph.
bool is_matching(const Graph& graph, std::span<const Edge> matching);

struct MaximalityCheck {
  bool ok = true;
  std::optional<Edge> augmenting;  // first edge with both endpoints unmatched
};

/// Throws InvalidArgument if `matching` is not a matching of `graph`.
MaximalityCheck verify_maximal_matching(const Graph& graph, std::span<const Edge> matching);

VertexSet matched_vertices(std::span<const Edge> matching);

/// Marks membership; entries outside [0, n) throw InvalidArgument.
std::vector<bool> membership(std::size_t n, std::span<const Vertex> vertex_set);

}  // namespace mmm
