#include "mmm/bipartite.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "mmm/errors.hpp"

namespace mmm::bipartite {

Bipartisation bipartise(const Graph& base) {
  Bipartisation out;
  out.base_size_ = base.num_vertices();
  std::vector<Edge> edges;
  edges.reserve(2 * base.num_edges());
  for (const Edge& e : base.edges()) {
    edges.emplace_back(out.left(e.u), out.right(e.v));
    edges.emplace_back(out.left(e.v), out.right(e.u));
  }
  out.graph_ = Graph(2 * base.num_vertices(), std::move(edges));
  return out;
}

Matching double_matching(const Bipartisation& bip, const Graph& base, const Matching& base_matching) {
  if (base.num_vertices() != bip.base_size()) throw InvalidArgument("bipartisation does not match the base graph");
  if (!is_matching(base, base_matching)) throw InvalidArgument("base edge set is not a matching");
  Matching out;
  out.reserve(2 * base_matching.size());
  for (const Edge& e : base_matching) {
    out.emplace_back(bip.left(e.u), bip.right(e.v));
    out.emplace_back(bip.left(e.v), bip.right(e.u));
  }
  std::sort(out.begin(), out.end());
  if (verify_maximal_matching(base, base_matching).ok && !verify_maximal_matching(bip.graph(), out).ok) {
    throw InternalError("doubling a maximal matching produced a non-maximal one");
  }
  return out;
}

PathCycleDecomposition decompose(const Bipartisation& bip, const Matching& matching) {
  if (!is_matching(bip.graph(), matching)) throw InvalidArgument("edge set is not a matching of the bipartisation");
  const std::size_t n = bip.base_size();
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<Vertex> next(n, kNone);
  std::vector<Vertex> prev(n, kNone);
  for (const Edge& e : matching) {
    // Edge stores (min, max); the left copy always has the smaller id.
    const Vertex from = bip.base_vertex(e.u);
    const Vertex to = bip.base_vertex(e.v);
    next[from] = to;
    prev[to] = from;
  }
  PathCycleDecomposition out;
  out.num_edges = matching.size();
  std::vector<bool> seen(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v] || prev[v] != kNone || next[v] == kNone) continue;
    std::vector<Vertex> path;
    for (Vertex w = v; w != kNone; w = next[w]) {
      path.push_back(w);
      seen[w] = true;
    }
    out.paths.push_back(std::move(path));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v] || next[v] == kNone) continue;
    std::vector<Vertex> cycle;
    for (Vertex w = v; !seen[w]; w = next[w]) {
      cycle.push_back(w);
      seen[w] = true;
    }
    out.cycles.push_back(std::move(cycle));
  }
  auto by_min = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  };
  std::sort(out.paths.begin(), out.paths.end(), by_min);
  return out;
}

VertexSet cover_from_decomposition(const PathCycleDecomposition& decomposition) {
  std::vector<Vertex> all;
  for (const auto& p : decomposition.paths) all.insert(all.end(), p.begin(), p.end());
  for (const auto& c : decomposition.cycles) all.insert(all.end(), c.begin(), c.end());
  return make_vertex_set(std::move(all));
}

SsehGadget sseh_gadget(const BipartiteGraph& g, const Rational& epsilon) {
  if (g.left_size() != g.right_size()) throw InvalidArgument("SSEH gadget needs a balanced bipartite graph");
  if (epsilon <= 0 || epsilon >= Rational(1, 2)) throw InvalidArgument("epsilon must satisfy 0 < epsilon < 1/2");
  const std::size_t n = g.left_size();
  const Rational pad_exact = (Rational(1, 2) + epsilon) * static_cast<long long>(n);
  if (denominator(pad_exact) != 1) {
    throw InvalidArgument("(1/2 + epsilon) * n = " + to_string(pad_exact) + " is not an integer");
  }
  SsehGadget out;
  out.n_ = n;
  out.pad_ = numerator(pad_exact).convert_to<std::size_t>();
  out.epsilon_ = epsilon;
  const std::size_t side = n + out.pad_;
  // Left side indices: A then A'; right side: B then B'.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      const bool original = i < n && j < n;
      if (!original || !g.has_edge(i, j)) edges.emplace_back(i, j);
    }
  }
  out.graph_ = BipartiteGraph(side, side, edges);
  return out;
}

Matching sseh_yes_matching(const SsehGadget& gadget, const BipartiteGraph& g, const VertexSet& k_a,
                           const VertexSet& k_b) {
  const std::size_t n = gadget.n();
  const Rational expected = (Rational(1, 2) - gadget.epsilon()) * static_cast<long long>(n);
  if (k_a.size() != k_b.size() || Rational(static_cast<long long>(k_a.size())) != expected) {
    throw InvalidArgument("planted biclique sides must have (1/2 - eps) n = " + to_string(expected) + " vertices");
  }
  for (Vertex i : k_a) {
    for (Vertex j : k_b) {
      if (i >= n || j >= n || !g.has_edge(i, j)) {
        throw InvalidArgument("planted sets are not a biclique in G");
      }
    }
  }
  auto in_ka = membership(n, k_a);
  auto in_kb = membership(n, k_b);
  Matching out;
  std::size_t next_pad = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_ka[i]) out.emplace_back(gadget.a(i), gadget.b_pad(next_pad++));
  }
  next_pad = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!in_kb[j]) out.emplace_back(gadget.a_pad(next_pad++), gadget.b(j));
  }
  std::sort(out.begin(), out.end());
  if (!verify_maximal_matching(gadget.graph().graph(), out).ok) {
    throw InternalError("SSEH yes-case matching is not maximal");
  }
  return out;
}

std::size_t anti_biclique_bound(const SsehGadget& gadget, std::size_t exact_mbb) {
  const std::size_t largest_anti_biclique = exact_mbb + 1;
  return gadget.side_size() > largest_anti_biclique ? gadget.side_size() - largest_anti_biclique : 0;
}

BipartiteGraph planted_biclique_graph(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  if (k > n) throw InvalidArgument("planted biclique larger than the sides");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((i < k && j < k) || coin(rng)) edges.emplace_back(i, j);
    }
  }
  return BipartiteGraph(n, n, edges);
}

}  // namespace mmm::bipartite
