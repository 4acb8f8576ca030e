#include "mmm/fracmatch.hpp"

#include <bit>
#include <string>

#include "mmm/errors.hpp"

namespace mmm::fracmatch {

void FractionalMatching::add(Edge e, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = values_.try_emplace(e, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) values_.erase(it);
  }
}

Rational FractionalMatching::value(Edge e) const {
  auto it = values_.find(e);
  return it == values_.end() ? Rational(0) : it->second;
}

FractionalMatching& FractionalMatching::operator+=(const FractionalMatching& other) {
  for (const auto& [e, v] : other.values_) add(e, v);
  return *this;
}

FractionalMatching operator+(FractionalMatching a, const FractionalMatching& b) {
  a += b;
  return a;
}

namespace {

void check_inputs(const gadget::GadgetGraph& gadget, const ulc::Planted& planted) {
  if (gadget.flavor() != gadget::Flavor::extended) {
    throw InvalidArgument("fractional matchings are built on the extended gadget");
  }
  if (gadget.num_colors() < 2) throw InvalidArgument("fractional matching construction needs at least two colors");
  if (planted.in_x0.size() != gadget.num_vars() || planted.labelling.size() != gadget.num_vars()) {
    throw InvalidArgument("planted data does not match the gadget");
  }
}

}  // namespace

CloudGround cloud_ground(const gadget::GadgetGraph& gadget, const ulc::Planted& planted, Vertex variable) {
  CloudGround g;
  g.ground = gadget.full_set();
  if (planted.in_x0.at(variable)) g.ground &= ~(ulc::ColorSet{1} << planted.labelling.at(variable));
  for (ulc::Color r = 0; r < gadget.num_colors(); ++r) {
    if ((g.ground >> r) & 1U) g.colors.push_back(r);
  }
  g.size = static_cast<unsigned>(g.colors.size());
  return g;
}

ulc::ColorSet lift(const CloudGround& ground, std::uint32_t local_subset) {
  ulc::ColorSet out = 0;
  for (std::uint32_t rest = local_subset; rest != 0; rest &= rest - 1) {
    out |= ulc::ColorSet{1} << ground.colors.at(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

std::vector<Edge> EmptyGroup::cycle_edges() const {
  std::vector<Edge> out;
  if (cycle.size() == 2) {
    out.emplace_back(cycle[0], cycle[1]);
  } else if (cycle.size() >= 3) {
    for (std::size_t i = 0; i < cycle.size(); ++i) out.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return out;
}

std::vector<EmptyGroup> plan_empty_groups(const gadget::GadgetGraph& gadget, const ulc::Planted& planted,
                                          const kneser::SearchOptions& options) {
  check_inputs(gadget, planted);
  const auto& mu = gadget.mu_table();
  const std::uint32_t colors = gadget.num_colors();
  const Graph& graph = gadget.graph();

  std::vector<Vertex> members[2];  // 0: outside X0, 1: inside X0
  for (Vertex x = 0; x < gadget.num_vars(); ++x) members[planted.in_x0[x] ? 1 : 0].push_back(gadget.id(x, 0));
  const Rational deficit[2] = {mu[0] - mu[colors], mu[0] - mu[colors - 1]};
  const char* names[2] = {"X \\ X0", "X0"};

  auto group_for = [&](int cls) {
    EmptyGroup g;
    g.deficit = deficit[cls];
    const auto& m = members[cls];
    if (m.size() == 2) {
      if (!graph.adjacent(m[0], m[1])) {
        throw InvalidArgument(std::string("the two empty-set vertices of class ") + names[cls] + " are not adjacent");
      }
      g.cycle = m;
    } else {
      auto cycle = kneser::cycle_in_subgraph(m, [&](Vertex a, Vertex b) { return graph.adjacent(a, b); }, options);
      if (!cycle) {
        throw InvalidArgument(std::string("empty-set vertices of class ") + names[cls] + " admit no Hamiltonian cycle");
      }
      g.cycle = std::move(*cycle);
    }
    return g;
  };

  std::optional<EmptyGroup> groups[2];
  for (int cls = 0; cls < 2; ++cls) {
    if (members[cls].size() >= 2) groups[cls] = group_for(cls);
  }
  for (int cls = 0; cls < 2; ++cls) {
    if (members[cls].size() != 1) continue;
    const int other = 1 - cls;
    const Vertex hub = members[cls][0];
    bool attachable = groups[other].has_value();
    for (Vertex v : members[other]) attachable = attachable && graph.adjacent(hub, v);
    if (!attachable) {
      throw InvalidArgument(std::string("class ") + names[cls] +
                            " has a single variable that cannot be attached to the other class; "
                            "need >= 2 variables per class");
    }
    groups[other]->hub = hub;
    groups[other]->hub_deficit = deficit[cls];
  }
  std::vector<EmptyGroup> out;
  for (auto& g : groups) {
    if (g) out.push_back(std::move(*g));
  }
  return out;
}

FractionalMatching build_f0(const gadget::GadgetGraph& gadget, const ulc::Planted& planted) {
  check_inputs(gadget, planted);
  FractionalMatching fm;
  for (Vertex x = 0; x < gadget.num_vars(); ++x) {
    const ulc::ColorSet ground = cloud_ground(gadget, planted, x).ground;
    for (ulc::ColorSet s = ground;; s = (s - 1) & ground) {
      const ulc::ColorSet partner = ground & ~s;
      if (s < partner) {
        Vertex a = gadget.id(x, s);
        Vertex b = gadget.id(x, partner);
        fm.add(Edge(a, b), gadget.edge_weight(a, b, gadget::EdgeRule::min));
      }
      if (s == 0) break;
    }
  }
  return fm;
}

FractionalMatching build_f1(const gadget::GadgetGraph& gadget, const ulc::Planted& planted, Strategy strategy) {
  check_inputs(gadget, planted);
  const auto& mu = gadget.mu_table();
  FractionalMatching fm;
  for (Vertex x = 0; x < gadget.num_vars(); ++x) {
    const CloudGround ground = cloud_ground(gadget, planted, x);
    const unsigned m = ground.size;
    for (unsigned k = 1; 2 * k < m; ++k) {
      const Rational layer_deficit = mu[k] - mu[m - k];
      const auto kneser_graph = kneser::build_bipartite_kneser(m, k);
      if (strategy == Strategy::hamiltonian) {
        const auto& cycle = kneser::hamiltonian_cycle(kneser_graph);
        const Rational share = layer_deficit / 4;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          const auto a = lift(ground, kneser_graph.subset_of(cycle[i]));
          const auto b = lift(ground, kneser_graph.subset_of(cycle[(i + 1) % cycle.size()]));
          fm.add(Edge(gadget.id(x, a), gadget.id(x, b)), share);
        }
      } else {
        const Rational share = layer_deficit / static_cast<long long>(kneser::binomial(m - k, k));
        const auto& subsets = kneser_graph.subsets();
        for (std::size_t i = 0; i < subsets.size(); ++i) {
          for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            if ((subsets[i] & subsets[j]) != 0) continue;
            fm.add(Edge(gadget.id(x, lift(ground, subsets[i])), gadget.id(x, lift(ground, subsets[j]))), share);
          }
        }
      }
    }
  }
  return fm;
}

FractionalMatching build_f2(const gadget::GadgetGraph& gadget, const ulc::Planted& planted) {
  FractionalMatching fm;
  for (const EmptyGroup& group : plan_empty_groups(gadget, planted)) {
    const auto edges = group.cycle_edges();
    Rational per_edge = group.cycle.size() == 2 ? group.deficit : group.deficit / 2;
    Rational transfer = 0;
    if (group.hub) {
      // Each cycle edge gives `transfer` to the hub edge at each of its endpoints.
      transfer = group.hub_deficit / 2 / static_cast<long long>(edges.size());
    }
    for (const Edge& e : edges) {
      fm.add(e, per_edge - transfer);
      if (group.hub) {
        fm.add(Edge(*group.hub, e.u), transfer);
        fm.add(Edge(*group.hub, e.v), transfer);
      }
    }
  }
  return fm;
}

FractionalMatching build_full(const gadget::GadgetGraph& gadget, const ulc::Planted& planted, Strategy strategy) {
  FractionalMatching fm = build_f0(gadget, planted);
  fm += build_f1(gadget, planted, strategy);
  fm += build_f2(gadget, planted);
  return fm;
}

SaturationReport validate(const gadget::GadgetGraph& gadget, const FractionalMatching& fm) {
  const Graph& graph = gadget.graph();
  SaturationReport report;
  report.load.assign(graph.num_vertices(), Rational(0));
  for (const auto& [e, value] : fm.values()) {
    if (e.v >= graph.num_vertices() || !graph.adjacent(e.u, e.v)) {
      report.support_ok = false;
      report.foreign_edges.push_back(e);
      continue;
    }
    if (value < 0 || value > gadget.edge_weight(e.u, e.v, gadget::EdgeRule::min)) {
      report.capacity_ok = false;
      report.capacity_violations.push_back(e);
    }
    report.load[e.u] += value;
    report.load[e.v] += value;
  }
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    const Rational& w = gadget.weight(v);
    if (report.load[v] == w) {
      report.saturated.push_back(v);
    } else {
      report.unsaturated.emplace_back(v, w - report.load[v]);
      if (report.load[v] > w) {
        report.budget_ok = false;
        report.budget_violations.push_back(v);
      }
    }
  }
  return report;
}

}  // namespace mmm::fracmatch
