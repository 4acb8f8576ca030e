#pragma once

#include <cstdint>
#include <vector>

#include "mmm/graph.hpp"
#include "mmm/rational.hpp"

namespace mmm::bipartite {

/// Bipartite double cover: v^l = v, v^r = n + v, and u^l ~ v^r iff u ~ v.
class Bipartisation {
 public:
  Bipartisation() = default;
  std::size_t base_size() const { return base_size_; }
  Vertex left(Vertex v) const { return v; }
  Vertex right(Vertex v) const { return static_cast<Vertex>(base_size_ + v); }
  bool is_left(Vertex v) const { return v < base_size_; }
  Vertex base_vertex(Vertex v) const { return is_left(v) ? v : static_cast<Vertex>(v - base_size_); }
  const Graph& graph() const { return graph_; }

  friend Bipartisation bipartise(const Graph& base);

 private:
  std::size_t base_size_ = 0;
  Graph graph_;
};

Bipartisation bipartise(const Graph& base);

/// Both copies (u^l, v^r) and (v^l, u^r) of every base edge. When the base
/// matching is maximal the result is checked maximal too (InternalError otherwise).
/// Throws InvalidArgument if the base matching is not a matching of `base`.
Matching double_matching(const Bipartisation& bip, const Graph& base, const Matching& base_matching);

/// Matching edges read as directed base edges u -> v for (u^l, v^r).
/// Paths come before cycles; within each kind components are ordered by
/// their smallest vertex. Paths are listed from their source, cycles from
/// their smallest vertex (the closing edge is implicit).
struct PathCycleDecomposition {
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::vector<Vertex>> cycles;
  std::size_t num_edges = 0;

  bool operator==(const PathCycleDecomposition&) const = default;
};

/// Throws InvalidArgument if `matching` is not a matching of the bipartisation.
PathCycleDecomposition decompose(const Bipartisation& bip, const Matching& matching);

/// Every vertex on a path or cycle of the decomposition.
VertexSet cover_from_decomposition(const PathCycleDecomposition& decomposition);

/// G' built from a balanced bipartite G = (A, B): the complement of E(G) on
/// A x B plus all of A' x B, A x B', A' x B' with |A'| = |B'| = (1/2 + eps) n.
/// Vertex layout: A = [0, n), A' = [n, n + pad), B = [n + pad, 2n + pad), B' = [2n + pad, 2n + 2 pad).
class SsehGadget {
 public:
  std::size_t n() const { return n_; }
  std::size_t pad() const { return pad_; }
  std::size_t side_size() const { return n_ + pad_; }
  const Rational& epsilon() const { return epsilon_; }
  const BipartiteGraph& graph() const { return graph_; }

  Vertex a(std::size_t i) const { return static_cast<Vertex>(i); }
  Vertex a_pad(std::size_t i) const { return static_cast<Vertex>(n_ + i); }
  Vertex b(std::size_t j) const { return static_cast<Vertex>(n_ + pad_ + j); }
  Vertex b_pad(std::size_t j) const { return static_cast<Vertex>(2 * n_ + pad_ + j); }

  friend SsehGadget sseh_gadget(const BipartiteGraph& g, const Rational& epsilon);

 private:
  std::size_t n_ = 0;
  std::size_t pad_ = 0;
  Rational epsilon_;
  BipartiteGraph graph_;
};

/// Throws InvalidArgument on an unbalanced input, epsilon outside (0, 1/2),
/// or a non-integral padding size.
SsehGadget sseh_gadget(const BipartiteGraph& g, const Rational& epsilon);

/// Matches A \ K_A with B' and A' with B \ K_B in index order. The planted
/// sides (indices into A and B) must have (1/2 - eps) n members each and form
/// a biclique in G. The result is checked maximal (InternalError otherwise).
Matching sseh_yes_matching(const SsehGadget& gadget, const BipartiteGraph& g, const VertexSet& k_a,
                           const VertexSet& k_b);

/// Lower bound on MMM(G'): a balanced anti-biclique of G' has at most
/// mbb(G) + 1 vertices per side. Returns max(0, side - (mbb + 1)).
std::size_t anti_biclique_bound(const SsehGadget& gadget, std::size_t exact_mbb);

/// Balanced bipartite graph with a planted K_{k,k} on the first k vertices of
/// each side and every other pair present independently with probability p.
BipartiteGraph planted_biclique_graph(std::size_t n, std::size_t k, double p, std::uint64_t seed);

}  // namespace mmm::bipartite
