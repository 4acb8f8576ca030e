#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mmm/graph.hpp"

namespace mmm::kneser {

std::uint64_t binomial(unsigned n, unsigned k);

/// Two copies S^L, S^R of every k-subset S of {0..n-1}; S1^L ~ S2^R iff S1 and S2 are disjoint.
/// Left copy of the i-th subset (increasing mask order) is vertex i, the right copy is C(n,k) + i.
class BipartiteKneser {
 public:
  unsigned n() const { return n_; }
  unsigned k() const { return k_; }
  std::size_t side_size() const { return subsets_.size(); }
  const std::vector<std::uint32_t>& subsets() const { return subsets_; }
  const Graph& graph() const { return graph_; }
  std::uint32_t subset_of(Vertex v) const { return subsets_[v % subsets_.size()]; }
  bool is_left(Vertex v) const { return v < subsets_.size(); }

  friend BipartiteKneser build_bipartite_kneser(unsigned n, unsigned k);

 private:
  unsigned n_ = 0;
  unsigned k_ = 0;
  std::vector<std::uint32_t> subsets_;
  Graph graph_;
};

/// Requires 1 <= k and 2k < n (and n <= 30).
BipartiteKneser build_bipartite_kneser(unsigned n, unsigned k);

/// Cyclic vertex sequence; the closing edge back to front() is implicit.
using HamCycle = std::vector<Vertex>;

struct SearchOptions {
  std::uint64_t node_limit = 100'000'000;
};

/// Backtracking from vertex 0, extending to the unvisited neighbor with the
/// fewest unvisited neighbors (ties to the lowest id). Returns nullopt when no
/// cycle exists; throws BudgetExceeded when the node limit is hit.
std::optional<HamCycle> find_hamiltonian_cycle(const Graph& graph, const SearchOptions& options = {});

/// Memoized per (n, k). Runs the backtracking search with a short node limit,
/// then a seeded rotation-extension search, then backtracking with the full
/// limit. Throws InternalError if all of them fail, since a cycle always
/// exists for 2k < n.
const HamCycle& hamiltonian_cycle(const BipartiteKneser& graph, const SearchOptions& options = {});

/// Hamiltonian cycle of the subgraph induced by `vertices`, in terms of the
/// caller's vertex ids. Needs at least three vertices.
std::optional<HamCycle> cycle_in_subgraph(std::span<const Vertex> vertices,
                                          const std::function<bool(Vertex, Vertex)>& adjacent,
                                          const SearchOptions& options = {});

/// Independent validator: a permutation of all vertices with every consecutive
/// pair (and the closing pair) adjacent.
bool is_hamiltonian_cycle(const Graph& graph, std::span<const Vertex> cycle);

}  // namespace mmm::kneser
