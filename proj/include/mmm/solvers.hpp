#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "mmm/graph.hpp"
#include "mmm/rational.hpp"

/// Exact and approximate oracles for the lemma checks. The exact solvers work
/// on bitsets and accept graphs with at most 64 vertices.
namespace mmm::solvers {

enum class Status { optimal, limit_reached };

struct SolverOptions {
  std::uint64_t node_limit = 50'000'000;
  std::size_t max_vertices = 60;
};

struct MatchingResult {
  Rational objective;
  Matching witness;
  std::uint64_t nodes = 0;
  Status status = Status::optimal;
};

struct VertexSetResult {
  Rational objective;
  VertexSet witness;
  std::uint64_t nodes = 0;
  Status status = Status::optimal;
};

struct BicliqueResult {
  std::size_t objective = 0;
  VertexSet left;   // indices into the left side
  VertexSet right;  // indices into the right side
  std::uint64_t nodes = 0;
  Status status = Status::optimal;
};

/// Scans the edges in a seeded random order, keeping every edge whose ends are free.
Matching greedy_maximal_matching(const Graph& graph, std::uint64_t seed);

/// Minimum (weighted) maximal matching. `edge_weights` follows graph.edges()
/// order and must be nonnegative; empty means cardinality.
///
/// Branches on the lowest open edge (u, v): u is matched to each free
/// neighbor in turn, or u is fixed unmatched, forcing its neighbors to be
/// matched. The bound adds, for a greedy induced matching of open edges, the
/// cheapest edge that could dominate each of them.
MatchingResult exact_mmm(const Graph& graph, std::span<const Rational> edge_weights = {},
                         const SolverOptions& options = {});

/// Visits every maximal matching exactly once (include/exclude over edges in
/// index order). Returns the count; throws BudgetExceeded past `limit` matchings.
std::uint64_t enumerate_maximal_matchings(const Graph& graph, const std::function<void(const Matching&)>& visit,
                                          std::uint64_t limit = 100'000);

/// Minimum (weighted) vertex cover as the complement of a maximum-weight
/// independent set. `vertex_weights` empty means cardinality.
VertexSetResult exact_min_vertex_cover(const Graph& graph, std::span<const Rational> vertex_weights = {},
                                       const SolverOptions& options = {});

/// Largest k with K_{k,k} in the graph. Sides are limited to 20 vertices by default.
BicliqueResult exact_mbb(const BipartiteGraph& graph, const SolverOptions& options = {.node_limit = 50'000'000, .max_vertices = 20});

/// Minimum vertex cover whose members all have a neighbor inside it, by
/// exhaustive search (at most 24 vertices).
VertexSetResult exact_min_total_vertex_cover(const Graph& graph);

}  // namespace mmm::solvers
