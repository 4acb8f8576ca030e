#include "mmm/graph.hpp"

#include <algorithm>
#include <string>

#include "mmm/errors.hpp"

namespace mmm {

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

Graph::Graph(std::size_t num_vertices) : adjacency_(num_vertices) {}

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(num_vertices) {
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= num_vertices) {
      throw InvalidArgument("edge endpoint " + std::to_string(e.v) + " out of range");
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw InvalidArgument("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a >= num_vertices() || b >= num_vertices()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

BipartiteGraph::BipartiteGraph(std::size_t left_size, std::size_t right_size,
                               const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : left_size_(left_size), right_size_(right_size) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [i, j] : edges) {
    if (i >= left_size || j >= right_size) {
      throw InvalidArgument("bipartite edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    list.emplace_back(left(i), right(j));
  }
  graph_ = Graph(left_size + right_size, std::move(list));
}

std::vector<bool> membership(std::size_t n, std::span<const Vertex> vertex_set) {
  std::vector<bool> in(n, false);
  for (Vertex v : vertex_set) {
    if (v >= n) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    in[v] = true;
  }
  return in;
}

CoverCheck verify_vertex_cover(const Graph& graph, std::span<const Vertex> vertex_set) {
  auto in = membership(graph.num_vertices(), vertex_set);
  for (const Edge& e : graph.edges()) {
    if (!in[e.u] && !in[e.v]) return {false, e};
  }
  return {};
}

bool is_matching(const Graph& graph, std::span<const Edge> matching) {
  std::vector<bool> used(graph.num_vertices(), false);
  for (const Edge& e : matching) {
    if (!graph.adjacent(e.u, e.v)) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

MaximalityCheck verify_maximal_matching(const Graph& graph, std::span<const Edge> matching) {
  if (!is_matching(graph, matching)) throw InvalidArgument("input is not a matching of the graph");
  std::vector<bool> used(graph.num_vertices(), false);
  for (const Edge& e : matching) used[e.u] = used[e.v] = true;
  for (const Edge& e : graph.edges()) {
    if (!used[e.u] && !used[e.v]) return {false, e};
  }
  return {};
}

VertexSet matched_vertices(std::span<const Edge> matching) {
  std::vector<Vertex> out;
  out.reserve(2 * matching.size());
  for (const Edge& e : matching) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  return make_vertex_set(std::move(out));
}

}  // namespace mmm
