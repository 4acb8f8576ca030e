#pragma once

#include <cstdint>
#include <vector>

#include "mmm/fracmatch.hpp"
#include "mmm/gadget.hpp"

/// Unweighted blowups: every gadget vertex v becomes 4 * n_v copies,
/// n_v = round(n * w(v)) with n = |V| / rho, and copies of adjacent vertices
/// are pairwise adjacent.
namespace mmm::blowup {

struct BlowupOptions {
  std::size_t max_vertices = 200'000;
  std::size_t max_edges = 20'000'000;
};

class BlowupGraph {
 public:
  BlowupGraph() = default;

  const gadget::GadgetGraph& base() const { return base_; }
  const Rational& rho() const { return rho_; }
  /// |V(base)| / rho; integral whenever 1/rho is.
  const Rational& n() const { return n_; }
  std::uint64_t units(Vertex base_vertex) const { return units_.at(base_vertex); }
  std::uint64_t copy_count(Vertex base_vertex) const { return 4 * units_.at(base_vertex); }
  Vertex copy(Vertex base_vertex, std::uint64_t index) const;
  Vertex base_of(Vertex copy_vertex) const;
  std::uint64_t index_of(Vertex copy_vertex) const { return copy_vertex - offset_[base_of(copy_vertex)]; }
  const Graph& graph() const { return graph_; }
  std::size_t num_vertices() const { return graph_.num_vertices(); }

  bool operator==(const BlowupGraph& other) const {
    return base_ == other.base_ && rho_ == other.rho_ && units_ == other.units_;
  }

  friend BlowupGraph blow_up(const gadget::GadgetGraph&, const Rational&, const BlowupOptions&);

 private:
  gadget::GadgetGraph base_;
  Rational rho_;
  Rational n_;
  std::vector<std::uint64_t> units_;
  std::vector<Vertex> offset_;  // size |V(base)| + 1
  Graph graph_;
};

/// Throws InvalidArgument for rho <= 0 and BudgetExceeded past the vertex or edge cap.
BlowupGraph blow_up(const gadget::GadgetGraph& gadget, const Rational& rho, const BlowupOptions& options = {});

/// All copies of the base cover's vertices. Throws InvalidArgument if base_cover is not a cover.
VertexSet product_cover(const BlowupGraph& blowup, const VertexSet& base_cover);

/// Drops vertices whose neighbors are all in the cover, trying the highest id
/// first, until no vertex can be dropped. Throws InvalidArgument on a non-cover.
VertexSet minimalize_cover(const Graph& graph, const VertexSet& cover);

struct ProductVerdict {
  bool product = true;
  VertexSet base_set;             // meaningful when product
  std::optional<Vertex> witness;  // a copy whose siblings are split, when mixed
};

ProductVerdict is_product_cover(const BlowupGraph& blowup, const VertexSet& cover);

struct CopyMatching {
  Matching edges;                // in the blowup, sorted
  std::vector<Edge> base_edges;  // projection of edges[i]
};

/// Discrete counterpart of the fractional matching: F0 pairs get
/// 4 * min(n_u, n_v) parallel copy pairs, each Kneser cycle edge gets
/// n_k - n_{m-k} pairs, and each empty-set cycle edge 2 * (leftover / 4)
/// (the full leftover for a two-member group). Every copy of a vertex outside
/// the planted independent set ends up matched; violations throw InternalError.
CopyMatching discretize_matching(const fracmatch::FractionalMatching& fm, const BlowupGraph& blowup,
                                 const ulc::Planted& planted);

/// Vertex cover in which every member has a neighbor in the set.
bool total_vertex_cover_check(const Graph& graph, const VertexSet& vertex_set);

}  // namespace mmm::blowup
