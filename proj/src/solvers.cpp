#include "mmm/solvers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "mmm/errors.hpp"

namespace mmm::solvers {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& graph, std::size_t max_vertices) {
  const std::size_t limit = std::min<std::size_t>(max_vertices, 64);
  if (graph.num_vertices() > limit) {
    throw BudgetExceeded("exact solver accepts at most " + std::to_string(limit) + " vertices, got " +
                         std::to_string(graph.num_vertices()));
  }
  std::vector<Mask> adj(graph.num_vertices(), 0);
  for (const Edge& e : graph.edges()) {
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return adj;
}

Mask all_vertices(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  for (; m != 0; m &= m - 1) f(static_cast<Vertex>(std::countr_zero(m)));
}

// ---------------------------------------------------------------------------
// Minimum maximal matching

template <typename W>
class MmmSearch {
 public:
  MmmSearch(const Graph& graph, std::vector<Mask> adj, std::vector<W> weight, std::uint64_t node_limit)
      : n_(graph.num_vertices()), adj_(std::move(adj)), weight_(std::move(weight)), node_limit_(node_limit) {}

  const W& w(Vertex a, Vertex b) const { return weight_[a * n_ + b]; }

  void offer(const Matching& m, const W& cost) {
    if (!best_ || cost < best_cost_) {
      best_ = m;
      best_cost_ = cost;
    }
  }

  void run() { search(0, 0, W(0)); }

  bool hit_limit() const { return hit_limit_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::optional<Matching>& best() const { return best_; }
  const W& best_cost() const { return best_cost_; }

 private:
  // Lower bound on the extra cost, or nullopt if some open edge can no longer be dominated.
  std::optional<W> bound(Mask matched, Mask forbidden) const {
    const Mask unmatched = all_vertices(n_) & ~matched;
    const Mask free = unmatched & ~forbidden;
    Mask blocked = 0;
    W total(0);
    for (Mask rest = unmatched; rest != 0; rest &= rest - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(rest));
      if (blocked & bit(u)) continue;
      const Mask nb = adj_[u] & unmatched & ~blocked;
      if (nb == 0) continue;
      const auto v = static_cast<Vertex>(std::countr_zero(nb));
      std::optional<W> cheapest;
      auto consider = [&](Vertex end) {
        if (!(free & bit(end))) return;
        for_each_bit(adj_[end] & free, [&](Vertex x) {
          if (!cheapest || w(end, x) < *cheapest) cheapest = w(end, x);
        });
      };
      consider(u);
      consider(v);
      if (!cheapest) return std::nullopt;
      total += *cheapest;
      blocked |= bit(u) | bit(v) | adj_[u] | adj_[v];
    }
    return total;
  }

  void search(Mask matched, Mask forbidden, const W& cost) {
    if (hit_limit_) return;
    if (++nodes_ > node_limit_) {
      hit_limit_ = true;
      return;
    }
    const Mask unmatched = all_vertices(n_) & ~matched;
    std::optional<Vertex> open_u;
    for (Mask rest = unmatched; rest != 0; rest &= rest - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(rest));
      if (adj_[u] & unmatched) {
        open_u = u;
        break;
      }
    }
    if (!open_u) {
      offer(chosen_, cost);
      return;
    }
    auto lb = bound(matched, forbidden);
    if (!lb) return;
    if (best_ && !(cost + *lb < best_cost_)) return;

    const Vertex u = *open_u;
    const Vertex v = static_cast<Vertex>(std::countr_zero(adj_[u] & unmatched));
    const Mask free = unmatched & ~forbidden;
    // A fixed-unmatched endpoint forces the other endpoint into the matching.
    const Vertex pivot = (forbidden & bit(u)) ? v : u;
    std::vector<Vertex> partners;
    for_each_bit(adj_[pivot] & free, [&](Vertex x) { partners.push_back(x); });
    std::stable_sort(partners.begin(), partners.end(),
                     [&](Vertex a, Vertex b) { return w(pivot, a) < w(pivot, b); });
    for (Vertex x : partners) {
      chosen_.emplace_back(pivot, x);
      search(matched | bit(pivot) | bit(x), forbidden, cost + w(pivot, x));
      chosen_.pop_back();
    }
    if (pivot == u && (free & bit(u)) && !(adj_[u] & forbidden)) {
      search(matched, forbidden | bit(u), cost);
    }
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<W> weight_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  bool hit_limit_ = false;
  Matching chosen_;
  std::optional<Matching> best_;
  W best_cost_{};
};

template <typename W>
MatchingResult run_mmm(const Graph& graph, std::vector<Mask> adj, std::vector<W> weight,
                       const std::vector<std::size_t>& greedy_order, const SolverOptions& options) {
  MmmSearch<W> search(graph, std::move(adj), std::move(weight), options.node_limit);
  // Seed the incumbent with a greedy maximal matching in the given edge order.
  {
    std::vector<bool> used(graph.num_vertices(), false);
    Matching m;
    W cost(0);
    for (std::size_t i : greedy_order) {
      const Edge& e = graph.edges()[i];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = true;
      m.push_back(e);
      cost += search.w(e.u, e.v);
    }
    search.offer(m, cost);
  }
  search.run();
  MatchingResult result;
  result.witness = *search.best();
  std::sort(result.witness.begin(), result.witness.end());
  result.objective = Rational(search.best_cost());
  result.nodes = search.nodes();
  result.status = search.hit_limit() ? Status::limit_reached : Status::optimal;
  return result;
}

// ---------------------------------------------------------------------------
// Maximum weight independent set

template <typename W>
class MwisSearch {
 public:
  MwisSearch(std::vector<Mask> adj, std::vector<W> weight, std::uint64_t node_limit)
      : adj_(std::move(adj)), weight_(std::move(weight)), node_limit_(node_limit) {}

  void run(Mask candidates) { search(candidates, 0, W(0)); }

  bool hit_limit() const { return hit_limit_; }
  std::uint64_t nodes() const { return nodes_; }
  Mask best_set() const { return best_set_; }
  const W& best_weight() const { return best_weight_; }

 private:
  // Greedy clique partition: an independent set takes at most one vertex per clique.
  W clique_bound(Mask candidates) const {
    W total(0);
    while (candidates != 0) {
      const auto first = static_cast<Vertex>(std::countr_zero(candidates));
      Mask clique = bit(first);
      Mask common = adj_[first] & candidates;
      W heaviest = weight_[first];
      while (common != 0) {
        const auto x = static_cast<Vertex>(std::countr_zero(common));
        clique |= bit(x);
        common &= adj_[x];
        if (heaviest < weight_[x]) heaviest = weight_[x];
      }
      total += heaviest;
      candidates &= ~clique;
    }
    return total;
  }

  void search(Mask candidates, Mask chosen, const W& weight) {
    if (hit_limit_) return;
    if (++nodes_ > node_limit_) {
      hit_limit_ = true;
      return;
    }
    // Isolated candidates always join.
    W current = weight;
    for (Mask rest = candidates; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      if ((adj_[v] & candidates) == 0) {
        chosen |= bit(v);
        candidates &= ~bit(v);
        current += weight_[v];
      }
    }
    if (candidates == 0) {
      if (!found_ || best_weight_ < current) {
        found_ = true;
        best_weight_ = current;
        best_set_ = chosen;
      }
      return;
    }
    if (found_ && !(best_weight_ < current + clique_bound(candidates))) return;

    Vertex pivot = 0;
    int best_degree = -1;
    for_each_bit(candidates, [&](Vertex v) {
      int d = std::popcount(adj_[v] & candidates);
      if (d > best_degree) {
        best_degree = d;
        pivot = v;
      }
    });
    search(candidates & ~(adj_[pivot] | bit(pivot)), chosen | bit(pivot), current + weight_[pivot]);
    // Excluding the pivot also excludes its twins: an optimum contains all of them or none.
    const Mask pivot_nbrs = adj_[pivot] & candidates;
    Mask twins = 0;
    for_each_bit(candidates, [&](Vertex v) {
      if ((adj_[v] & candidates) == pivot_nbrs) twins |= bit(v);
    });
    search(candidates & ~twins, chosen, current);
  }

  std::vector<Mask> adj_;
  std::vector<W> weight_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  bool hit_limit_ = false;
  bool found_ = false;
  W best_weight_{};
  Mask best_set_ = 0;
};

template <typename W>
VertexSetResult run_cover(const Graph& graph, std::vector<Mask> adj, std::vector<W> weight,
                          const SolverOptions& options) {
  W total(0);
  for (const W& x : weight) total += x;
  MwisSearch<W> search(std::move(adj), std::move(weight), options.node_limit);
  search.run(all_vertices(graph.num_vertices()));
  VertexSetResult result;
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (!(search.best_set() & bit(v))) result.witness.push_back(v);
  }
  result.objective = Rational(total - search.best_weight());
  result.nodes = search.nodes();
  result.status = search.hit_limit() ? Status::limit_reached : Status::optimal;
  return result;
}

}  // namespace

Matching greedy_maximal_matching(const Graph& graph, std::uint64_t seed) {
  std::vector<std::size_t> order(graph.num_edges());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> used(graph.num_vertices(), false);
  Matching out;
  for (std::size_t i : order) {
    const Edge& e = graph.edges()[i];
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = true;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MatchingResult exact_mmm(const Graph& graph, std::span<const Rational> edge_weights, const SolverOptions& options) {
  auto adj = adjacency_masks(graph, options.max_vertices);
  const std::size_t n = graph.num_vertices();
  std::vector<std::size_t> order(graph.num_edges());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (edge_weights.empty()) {
    std::vector<long long> weight(n * n, 1);
    return run_mmm(graph, std::move(adj), std::move(weight), order, options);
  }
  if (edge_weights.size() != graph.num_edges()) throw InvalidArgument("one weight per edge is required");
  std::vector<Rational> weight(n * n, Rational(0));
  for (std::size_t i = 0; i < graph.num_edges(); ++i) {
    if (edge_weights[i] < 0) throw InvalidArgument("edge weights must be nonnegative");
    const Edge& e = graph.edges()[i];
    weight[e.u * n + e.v] = weight[e.v * n + e.u] = edge_weights[i];
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edge_weights[a] < edge_weights[b]; });
  return run_mmm(graph, std::move(adj), std::move(weight), order, options);
}

std::uint64_t enumerate_maximal_matchings(const Graph& graph, const std::function<void(const Matching&)>& visit,
                                          std::uint64_t limit) {
  const auto& edges = graph.edges();
  const std::size_t m = edges.size();
  // last[v]: one past the last edge index touching v.
  std::vector<std::size_t> last(graph.num_vertices(), 0);
  for (std::size_t i = 0; i < m; ++i) last[edges[i].u] = last[edges[i].v] = i + 1;
  std::vector<bool> used(graph.num_vertices(), false);
  Matching current;
  std::uint64_t count = 0;

  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == m) {
      for (const Edge& e : edges) {
        if (!used[e.u] && !used[e.v]) return;
      }
      if (++count > limit) {
        throw BudgetExceeded("more than " + std::to_string(limit) + " maximal matchings");
      }
      visit(current);
      return;
    }
    const Edge& e = edges[i];
    const bool both_free = !used[e.u] && !used[e.v];
    if (both_free) {
      used[e.u] = used[e.v] = true;
      current.push_back(e);
      recurse(i + 1);
      current.pop_back();
      used[e.u] = used[e.v] = false;
    }
    // Leaving a free-free edge out needs a later edge at one of its ends.
    if (both_free && last[e.u] <= i + 1 && last[e.v] <= i + 1) return;
    recurse(i + 1);
  };
  recurse(0);
  return count;
}

VertexSetResult exact_min_vertex_cover(const Graph& graph, std::span<const Rational> vertex_weights,
                                       const SolverOptions& options) {
  auto adj = adjacency_masks(graph, options.max_vertices);
  if (vertex_weights.empty()) {
    return run_cover(graph, std::move(adj), std::vector<long long>(graph.num_vertices(), 1), options);
  }
  if (vertex_weights.size() != graph.num_vertices()) throw InvalidArgument("one weight per vertex is required");
  std::vector<Rational> weight(vertex_weights.begin(), vertex_weights.end());
  for (const Rational& w : weight) {
    if (w < 0) throw InvalidArgument("vertex weights must be nonnegative");
  }
  return run_cover(graph, std::move(adj), std::move(weight), options);
}

BicliqueResult exact_mbb(const BipartiteGraph& graph, const SolverOptions& options) {
  const std::size_t left = graph.left_size();
  const std::size_t right = graph.right_size();
  const std::size_t cap = std::min<std::size_t>(options.max_vertices, 64);
  if (left > cap || right > cap) {
    throw BudgetExceeded("exact_mbb accepts sides of at most " + std::to_string(cap) + " vertices");
  }
  std::vector<Mask> nbrs(left, 0);
  for (std::size_t i = 0; i < left; ++i) {
    for (std::size_t j = 0; j < right; ++j) {
      if (graph.has_edge(i, j)) nbrs[i] |= Mask{1} << j;
    }
  }
  BicliqueResult result;
  Mask best_left = 0;
  Mask best_common = 0;
  std::uint64_t nodes = 0;
  bool hit_limit = false;
  std::function<void(std::size_t, Mask, std::size_t, Mask)> recurse = [&](std::size_t i, Mask chosen, std::size_t count,
                                                                          Mask common) {
    if (hit_limit) return;
    if (++nodes > options.node_limit) {
      hit_limit = true;
      return;
    }
    const auto common_size = static_cast<std::size_t>(std::popcount(common));
    const std::size_t value = std::min(count, common_size);
    if (value > result.objective) {
      result.objective = value;
      best_left = chosen;
      best_common = common;
    }
    if (i == left) return;
    if (std::min(count + (left - i), common_size) <= result.objective) return;
    recurse(i + 1, chosen | (Mask{1} << i), count + 1, common & nbrs[i]);
    recurse(i + 1, chosen, count, common);
  };
  recurse(0, 0, 0, all_vertices(right));
  for (Mask m = best_left; m != 0 && result.left.size() < result.objective; m &= m - 1) {
    result.left.push_back(static_cast<Vertex>(std::countr_zero(m)));
  }
  for (Mask m = best_common; m != 0 && result.right.size() < result.objective; m &= m - 1) {
    result.right.push_back(static_cast<Vertex>(std::countr_zero(m)));
  }
  result.nodes = nodes;
  result.status = hit_limit ? Status::limit_reached : Status::optimal;
  return result;
}

VertexSetResult exact_min_total_vertex_cover(const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  if (n > 24) throw BudgetExceeded("exact_min_total_vertex_cover accepts at most 24 vertices");
  auto adj = adjacency_masks(graph, 24);
  std::optional<Mask> best;
  for (Mask set = 0; set <= all_vertices(n); ++set) {
    if (best && std::popcount(set) >= std::popcount(*best)) continue;
    bool ok = true;
    for (const Edge& e : graph.edges()) {
      if (!(set & (bit(e.u) | bit(e.v)))) {
        ok = false;
        break;
      }
    }
    for (Mask rest = set; ok && rest != 0; rest &= rest - 1) {
      if (!(adj[static_cast<std::size_t>(std::countr_zero(rest))] & set)) ok = false;
    }
    if (ok) best = set;
    if (set == all_vertices(n)) break;
  }
  VertexSetResult result;
  if (!best) throw InternalError("no total vertex cover exists (isolated edge endpoints always admit one)");
  for_each_bit(*best, [&](Vertex v) { result.witness.push_back(v); });
  result.objective = static_cast<long long>(result.witness.size());
  result.nodes = Mask{1} << n;
  return result;
}

}  // namespace mmm::solvers
