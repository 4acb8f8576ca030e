#include "mmm/kneser.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <random>
#include <string>

#include "mmm/errors.hpp"

namespace mmm::kneser {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (unsigned i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
  return result;
}

BipartiteKneser build_bipartite_kneser(unsigned n, unsigned k) {
  if (k < 1 || 2 * k >= n) {
    throw InvalidArgument("bipartite Kneser graph needs 1 <= k and 2k < n (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
  }
  if (n > 30) throw InvalidArgument("ground set larger than 30");
  BipartiteKneser out;
  out.n_ = n;
  out.k_ = k;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (static_cast<unsigned>(std::popcount(s)) == k) out.subsets_.push_back(s);
  }
  const std::size_t side = out.subsets_.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      if ((out.subsets_[i] & out.subsets_[j]) == 0) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(side + j));
    }
  }
  out.graph_ = Graph(2 * side, std::move(edges));
  return out;
}

std::optional<HamCycle> find_hamiltonian_cycle(const Graph& graph, const SearchOptions& options) {
  const std::size_t n = graph.num_vertices();
  if (n < 3) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (graph.degree(v) < 2) return std::nullopt;
  }

  std::vector<bool> visited(n, false);
  std::vector<std::size_t> free_degree(n);
  for (Vertex v = 0; v < n; ++v) free_degree[v] = graph.degree(v);

  auto visit = [&](Vertex v) {
    visited[v] = true;
    for (Vertex w : graph.neighbors(v)) --free_degree[w];
  };
  auto unvisit = [&](Vertex v) {
    visited[v] = false;
    for (Vertex w : graph.neighbors(v)) ++free_degree[w];
  };
  auto candidates = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : graph.neighbors(v)) {
      if (!visited[w]) out.push_back(w);
    }
    std::stable_sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return free_degree[a] < free_degree[b]; });
    return out;
  };

  struct Frame {
    std::vector<Vertex> options;
    std::size_t next = 0;
  };
  HamCycle path{0};
  visit(0);
  std::vector<Frame> stack;
  stack.push_back({candidates(0)});
  std::uint64_t nodes = 0;

  while (!stack.empty()) {
    if (path.size() == n) {
      if (graph.adjacent(path.back(), path.front())) return path;
      unvisit(path.back());
      path.pop_back();
      stack.pop_back();
      continue;
    }
    Frame& top = stack.back();
    if (top.next == top.options.size()) {
      stack.pop_back();
      if (path.size() > 1) {
        unvisit(path.back());
        path.pop_back();
      } else {
        break;
      }
      continue;
    }
    Vertex w = top.options[top.next++];
    if (++nodes > options.node_limit) {
      throw BudgetExceeded("Hamiltonian cycle search exceeded " + std::to_string(options.node_limit) + " nodes");
    }
    visit(w);
    path.push_back(w);
    // An unvisited neighbor of w with no unvisited neighbors left can only be
    // entered from w and never left, so it must be the final vertex.
    bool dead = false;
    for (Vertex u : graph.neighbors(w)) {
      if (!visited[u] && free_degree[u] == 0 && path.size() + 1 < n) dead = true;
    }
    stack.push_back({path.size() == n || dead ? std::vector<Vertex>{} : candidates(w)});
  }
  return std::nullopt;
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<unsigned, unsigned>, HamCycle> cycle_cache;

constexpr std::uint64_t kQuickBacktrack = 1'000'000;

// Posa rotation-extension with a fixed seed: extend the path from its end
// when possible, otherwise rotate on a random neighbor of the end. Either end
// may be worked on, so the path is reversed at random.
std::optional<HamCycle> rotation_search(const Graph& graph, std::uint64_t seed, std::uint64_t step_limit) {
  const std::size_t n = graph.num_vertices();
  if (n < 3) return std::nullopt;
  constexpr std::size_t kOff = ~std::size_t{0};
  std::mt19937_64 rng(seed);
  std::vector<Vertex> path{0};
  std::vector<std::size_t> pos(n, kOff);
  pos[0] = 0;
  auto reverse_tail = [&](std::size_t from) {
    std::reverse(path.begin() + static_cast<std::ptrdiff_t>(from), path.end());
    for (std::size_t i = from; i < path.size(); ++i) pos[path[i]] = i;
  };
  std::vector<Vertex> choices;
  for (std::uint64_t step = 0; step < step_limit; ++step) {
    if (rng() & 1) reverse_tail(0);
    const Vertex end = path.back();
    if (path.size() == n && graph.adjacent(end, path.front())) {
      auto start = std::find(path.begin(), path.end(), Vertex{0});
      std::rotate(path.begin(), start, path.end());
      return path;
    }
    choices.clear();
    for (Vertex w : graph.neighbors(end)) {
      if (pos[w] == kOff) choices.push_back(w);
    }
    if (!choices.empty()) {
      const Vertex w = choices[rng() % choices.size()];
      pos[w] = path.size();
      path.push_back(w);
      continue;
    }
    for (Vertex w : graph.neighbors(end)) {
      if (pos[w] + 2 < path.size()) choices.push_back(w);
    }
    if (choices.empty()) return std::nullopt;
    reverse_tail(pos[choices[rng() % choices.size()]] + 1);
  }
  return std::nullopt;
}

}  // namespace

const HamCycle& hamiltonian_cycle(const BipartiteKneser& graph, const SearchOptions& options) {
  const auto key = std::pair{graph.n(), graph.k()};
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cycle_cache.find(key); it != cycle_cache.end()) return it->second;
  }
  // A short exhaustive search settles small cases; denser middle layers need rotations.
  std::optional<HamCycle> cycle;
  try {
    cycle = find_hamiltonian_cycle(graph.graph(), {.node_limit = std::min(options.node_limit, kQuickBacktrack)});
  } catch (const BudgetExceeded&) {
    cycle = rotation_search(graph.graph(), graph.n() * 64 + graph.k(), options.node_limit);
    if (!cycle) cycle = find_hamiltonian_cycle(graph.graph(), options);
  }
  if (!cycle || !is_hamiltonian_cycle(graph.graph(), *cycle)) {
    throw InternalError("no Hamiltonian cycle found in B(" + std::to_string(graph.n()) + "," +
                        std::to_string(graph.k()) + ") although one exists");
  }
  std::lock_guard lock(cache_mutex);
  // Searches are deterministic, so a concurrent insert stored the same cycle.
  return cycle_cache.emplace(key, std::move(*cycle)).first->second;
}

std::optional<HamCycle> cycle_in_subgraph(std::span<const Vertex> vertices,
                                          const std::function<bool(Vertex, Vertex)>& adjacent,
                                          const SearchOptions& options) {
  if (vertices.size() < 3) throw InvalidArgument("cycle_in_subgraph needs at least three vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  Graph local(vertices.size(), std::move(edges));
  auto cycle = find_hamiltonian_cycle(local, options);
  if (!cycle) return std::nullopt;
  HamCycle mapped;
  mapped.reserve(cycle->size());
  for (Vertex v : *cycle) mapped.push_back(vertices[v]);
  return mapped;
}

bool is_hamiltonian_cycle(const Graph& graph, std::span<const Vertex> cycle) {
  const std::size_t n = graph.num_vertices();
  if (cycle.size() != n || n < 3) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!graph.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
  }
  return true;
}

}  // namespace mmm::kneser
