#include "mmm/blowup.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mmm/errors.hpp"

namespace mmm::blowup {

Vertex BlowupGraph::copy(Vertex base_vertex, std::uint64_t index) const {
  if (index >= copy_count(base_vertex)) throw InvalidArgument("copy index out of range");
  return static_cast<Vertex>(offset_[base_vertex] + index);
}

Vertex BlowupGraph::base_of(Vertex copy_vertex) const {
  if (copy_vertex >= graph_.num_vertices()) throw InvalidArgument("blowup vertex out of range");
  auto it = std::upper_bound(offset_.begin(), offset_.end(), copy_vertex);
  return static_cast<Vertex>(it - offset_.begin() - 1);
}

BlowupGraph blow_up(const gadget::GadgetGraph& gadget, const Rational& rho, const BlowupOptions& options) {
  if (rho <= 0) throw InvalidArgument("rho must be positive");
  BlowupGraph out;
  out.base_ = gadget;
  out.rho_ = rho;
  const Graph& base = gadget.graph();
  out.n_ = Rational(static_cast<long long>(base.num_vertices())) / rho;

  std::vector<std::uint64_t> units_by_size;
  for (const Rational& w : gadget.mu_table()) {
    BigInt u = round_half_away(out.n_ * w);
    if (u > BigInt(options.max_vertices)) throw BudgetExceeded("blowup exceeds the vertex cap");
    units_by_size.push_back(u.convert_to<std::uint64_t>());
  }
  out.units_.resize(base.num_vertices());
  out.offset_.resize(base.num_vertices() + 1);
  std::uint64_t total = 0;
  for (Vertex v = 0; v < base.num_vertices(); ++v) {
    out.units_[v] = units_by_size[static_cast<std::size_t>(std::popcount(gadget.vertex(v).subset))];
    out.offset_[v] = static_cast<Vertex>(total);
    total += 4 * out.units_[v];
    if (total > options.max_vertices) {
      throw BudgetExceeded("blowup exceeds the vertex cap of " + std::to_string(options.max_vertices));
    }
  }
  out.offset_[base.num_vertices()] = static_cast<Vertex>(total);

  std::uint64_t edge_total = 0;
  for (const Edge& e : base.edges()) edge_total += 16 * out.units_[e.u] * out.units_[e.v];
  if (edge_total > options.max_edges) {
    throw BudgetExceeded("blowup exceeds the edge cap of " + std::to_string(options.max_edges));
  }
  std::vector<Edge> edges;
  edges.reserve(edge_total);
  for (const Edge& e : base.edges()) {
    for (std::uint64_t i = 0; i < 4 * out.units_[e.u]; ++i) {
      for (std::uint64_t j = 0; j < 4 * out.units_[e.v]; ++j) {
        edges.emplace_back(static_cast<Vertex>(out.offset_[e.u] + i), static_cast<Vertex>(out.offset_[e.v] + j));
      }
    }
  }
  out.graph_ = Graph(total, std::move(edges));
  return out;
}

VertexSet product_cover(const BlowupGraph& blowup, const VertexSet& base_cover) {
  if (auto check = verify_vertex_cover(blowup.base().graph(), base_cover); !check.ok) {
    throw InvalidArgument("base set is not a vertex cover: edge {" + std::to_string(check.uncovered->u) + "," +
                          std::to_string(check.uncovered->v) + "} is uncovered");
  }
  VertexSet out;
  for (Vertex v : base_cover) {
    for (std::uint64_t i = 0; i < blowup.copy_count(v); ++i) out.push_back(blowup.copy(v, i));
  }
  return make_vertex_set(std::move(out));
}

VertexSet minimalize_cover(const Graph& graph, const VertexSet& cover) {
  if (!verify_vertex_cover(graph, cover).ok) throw InvalidArgument("input set is not a vertex cover");
  auto in = membership(graph.num_vertices(), cover);
  for (Vertex v = static_cast<Vertex>(graph.num_vertices()); v-- > 0;) {
    if (!in[v]) continue;
    auto nbrs = graph.neighbors(v);
    if (std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return in[w]; })) in[v] = false;
  }
  VertexSet out;
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

ProductVerdict is_product_cover(const BlowupGraph& blowup, const VertexSet& cover) {
  auto in = membership(blowup.num_vertices(), cover);
  ProductVerdict verdict;
  for (Vertex v = 0; v < blowup.base().graph().num_vertices(); ++v) {
    const std::uint64_t count = blowup.copy_count(v);
    std::uint64_t inside = 0;
    for (std::uint64_t i = 0; i < count; ++i) inside += in[blowup.copy(v, i)] ? 1 : 0;
    if (inside != 0 && inside != count) {
      for (std::uint64_t i = 0; i < count; ++i) {
        if (in[blowup.copy(v, i)]) return {false, {}, blowup.copy(v, i)};
      }
    }
    if (count > 0 && inside == count) verdict.base_set.push_back(v);
  }
  return verdict;
}

namespace {

class CopyAllocator {
 public:
  CopyAllocator(const BlowupGraph& blowup, const fracmatch::FractionalMatching& fm)
      : blowup_(blowup), fm_(fm), cursor_(blowup.base().graph().num_vertices(), 0) {}

  void pair(Vertex a, Vertex b, std::uint64_t count) {
    if (count == 0) return;
    const Edge base_edge(a, b);
    if (fm_.value(base_edge) <= 0) {
      throw InternalError("discretization uses base edge {" + std::to_string(a) + "," + std::to_string(b) +
                          "} outside the fractional support");
    }
    for (std::uint64_t t = 0; t < count; ++t) {
      out_.edges.emplace_back(take(a), take(b));
      out_.base_edges.push_back(base_edge);
    }
  }

  std::uint64_t leftover(Vertex v) const { return blowup_.copy_count(v) - cursor_[v]; }
  std::uint64_t used(Vertex v) const { return cursor_[v]; }
  CopyMatching finish() && { return std::move(out_); }

 private:
  Vertex take(Vertex v) {
    if (cursor_[v] >= blowup_.copy_count(v)) {
      throw InternalError("leftover mismatch: base vertex " + std::to_string(v) + " ran out of copies");
    }
    return blowup_.copy(v, cursor_[v]++);
  }

  const BlowupGraph& blowup_;
  const fracmatch::FractionalMatching& fm_;
  std::vector<std::uint64_t> cursor_;
  CopyMatching out_;
};

std::uint64_t quarter(std::uint64_t leftover, Vertex v) {
  if (leftover % 4 != 0) {
    throw InternalError("leftover of base vertex " + std::to_string(v) + " is not divisible by 4");
  }
  return leftover / 4;
}

}  // namespace

CopyMatching discretize_matching(const fracmatch::FractionalMatching& fm, const BlowupGraph& blowup,
                                 const ulc::Planted& planted) {
  const gadget::GadgetGraph& gadget = blowup.base();
  CopyAllocator alloc(blowup, fm);

  for (Vertex x = 0; x < gadget.num_vars(); ++x) {
    const auto ground = fracmatch::cloud_ground(gadget, planted, x);
    for (ulc::ColorSet s = ground.ground;; s = (s - 1) & ground.ground) {
      const ulc::ColorSet partner = ground.ground & ~s;
      if (s < partner) {
        const Vertex a = gadget.id(x, s);
        const Vertex b = gadget.id(x, partner);
        alloc.pair(a, b, 4 * std::min(blowup.units(a), blowup.units(b)));
      }
      if (s == 0) break;
    }
    const unsigned m = ground.size;
    for (unsigned k = 1; 2 * k < m; ++k) {
      const auto kneser_graph = kneser::build_bipartite_kneser(m, k);
      const auto& cycle = kneser::hamiltonian_cycle(kneser_graph);
      // Copy counts depend only on |S|, so one layer member fixes the per-traversal count.
      const ulc::ColorSet sample = fracmatch::lift(ground, kneser_graph.subsets().front());
      const std::uint64_t small = blowup.units(gadget.id(x, sample));
      const std::uint64_t large = blowup.units(gadget.id(x, ground.ground & ~sample));
      if (small < large) throw InternalError("copy counts are not monotone in the set size");
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vertex a = gadget.id(x, fracmatch::lift(ground, kneser_graph.subset_of(cycle[i])));
        const Vertex b = gadget.id(x, fracmatch::lift(ground, kneser_graph.subset_of(cycle[(i + 1) % cycle.size()])));
        alloc.pair(a, b, small - large);
      }
    }
  }

  for (const fracmatch::EmptyGroup& group : fracmatch::plan_empty_groups(gadget, planted)) {
    const auto edges = group.cycle_edges();
    const std::uint64_t member_units = quarter(alloc.leftover(group.cycle.front()), group.cycle.front());
    for (Vertex v : group.cycle) {
      if (alloc.leftover(v) != 4 * member_units) {
        throw InternalError("empty-set leftovers differ inside a group");
      }
    }
    std::vector<std::int64_t> per_edge(edges.size(),
                                       static_cast<std::int64_t>(group.cycle.size() == 2 ? 4 * member_units : 2 * member_units));
    std::vector<std::pair<Vertex, std::uint64_t>> hub_pairs;
    if (group.hub) {
      const std::uint64_t hub_units = quarter(alloc.leftover(*group.hub), *group.hub);
      const std::uint64_t transfers = 2 * hub_units;
      std::vector<std::uint64_t> to_member(gadget.graph().num_vertices(), 0);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::uint64_t t = transfers / edges.size() + (i < transfers % edges.size() ? 1 : 0);
        per_edge[i] -= static_cast<std::int64_t>(t);
        if (per_edge[i] < 0) throw InternalError("leftover mismatch: hub needs more copies than its group can release");
        to_member[edges[i].u] += t;
        to_member[edges[i].v] += t;
      }
      for (Vertex v : group.cycle) hub_pairs.emplace_back(v, to_member[v]);
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      alloc.pair(edges[i].u, edges[i].v, static_cast<std::uint64_t>(per_edge[i]));
    }
    for (auto [v, count] : hub_pairs) alloc.pair(*group.hub, v, count);
  }

  const auto independent = gadget::independent_set(gadget, planted);
  auto in_is = membership(gadget.graph().num_vertices(), independent.vertices);
  for (Vertex v = 0; v < gadget.graph().num_vertices(); ++v) {
    const std::uint64_t expected = in_is[v] ? 0 : blowup.copy_count(v);
    if (alloc.used(v) != expected) {
      throw InternalError("leftover mismatch at base vertex " + std::to_string(v) + ": matched " +
                          std::to_string(alloc.used(v)) + " of " + std::to_string(expected) + " copies");
    }
  }
  CopyMatching result = std::move(alloc).finish();
  // Keep the projection aligned with the sorted edge list.
  std::vector<std::size_t> order(result.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return result.edges[a] < result.edges[b]; });
  CopyMatching sorted;
  for (std::size_t i : order) {
    sorted.edges.push_back(result.edges[i]);
    sorted.base_edges.push_back(result.base_edges[i]);
  }
  return sorted;
}

bool total_vertex_cover_check(const Graph& graph, const VertexSet& vertex_set) {
  if (!verify_vertex_cover(graph, vertex_set).ok) return false;
  auto in = membership(graph.num_vertices(), vertex_set);
  for (Vertex v : vertex_set) {
    auto nbrs = graph.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return in[w]; })) return false;
  }
  return true;
}

}  // namespace mmm::blowup
