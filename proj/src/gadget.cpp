#include "mmm/gadget.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mmm/errors.hpp"

namespace mmm::gadget {

namespace {

constexpr std::size_t kMaxGadgetVertices = std::size_t{1} << 22;

void check_epsilon(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= Rational(1, 2)) {
    throw InvalidArgument("epsilon must satisfy 0 < epsilon < 1/2, got " + to_string(epsilon));
  }
}

std::vector<Rational> make_mu_table(std::size_t num_vars, std::uint32_t num_colors, const Rational& epsilon) {
  std::vector<Rational> table;
  table.reserve(num_colors + 1);
  for (std::uint32_t s = 0; s <= num_colors; ++s) table.push_back(mu(num_vars, num_colors, epsilon, s));
  return table;
}

}  // namespace

Rational mu(std::size_t num_vars, std::uint32_t num_colors, const Rational& epsilon, std::uint32_t set_size) {
  check_epsilon(epsilon);
  if (num_vars == 0) throw InvalidArgument("gadget needs at least one variable");
  if (set_size > num_colors) throw InvalidArgument("set size exceeds the number of colors");
  const Rational p = Rational(1, 2) - epsilon;
  return power(p, set_size) * power(1 - p, num_colors - set_size) / static_cast<long long>(num_vars);
}

GadgetGraph::GadgetGraph(std::size_t num_vars, std::uint32_t num_colors, Rational epsilon, Flavor flavor, Graph graph)
    : num_vars_(num_vars),
      num_colors_(num_colors),
      epsilon_(std::move(epsilon)),
      flavor_(flavor),
      mu_(make_mu_table(num_vars, num_colors, epsilon_)),
      graph_(std::move(graph)) {
  if (num_colors_ > ulc::kMaxColors) throw InvalidArgument("at most 30 colors are supported");
  if (graph_.num_vertices() != num_vars_ * cloud_size()) {
    throw InvalidArgument("gadget graph has " + std::to_string(graph_.num_vertices()) + " vertices, expected " +
                          std::to_string(num_vars_ * cloud_size()));
  }
}

const Rational& GadgetGraph::weight(Vertex v) const {
  if (v >= graph_.num_vertices()) throw InvalidArgument("gadget vertex out of range");
  return mu_[static_cast<std::size_t>(std::popcount(vertex(v).subset))];
}

Rational GadgetGraph::edge_weight(Vertex a, Vertex b, EdgeRule rule) const {
  const Rational& wa = weight(a);
  const Rational& wb = weight(b);
  return rule == EdgeRule::plus ? wa + wb : std::min(wa, wb);
}

Rational GadgetGraph::set_weight(std::span<const Vertex> vertices) const {
  Rational total = 0;
  for (Vertex v : vertices) total += weight(v);
  return total;
}

Rational GadgetGraph::total_weight() const {
  Rational total = 0;
  for (Vertex v = 0; v < graph_.num_vertices(); ++v) total += weight(v);
  return total;
}

bool GadgetGraph::operator==(const GadgetGraph& other) const {
  return num_vars_ == other.num_vars_ && num_colors_ == other.num_colors_ && epsilon_ == other.epsilon_ &&
         flavor_ == other.flavor_ && graph_ == other.graph_;
}

GadgetGraph build_gadget(const ulc::UlcInstance& instance, const Rational& epsilon, Flavor flavor) {
  check_epsilon(epsilon);
  const std::uint32_t colors = instance.num_colors();
  if (colors > ulc::kMaxColors) throw InvalidArgument("at most 30 colors are supported");
  const std::size_t cloud = std::size_t{1} << colors;
  if (instance.num_vars() == 0) throw InvalidArgument("instance has no variables");
  if (instance.num_vars() > kMaxGadgetVertices / cloud) {
    throw BudgetExceeded("gadget would exceed " + std::to_string(kMaxGadgetVertices) + " vertices");
  }
  const auto full = static_cast<ulc::ColorSet>(cloud - 1);
  auto id = [&](Vertex x, ulc::ColorSet s) { return static_cast<Vertex>((static_cast<std::size_t>(x) << colors) | s); };

  std::vector<Edge> edges;
  std::vector<ulc::ColorSet> image(cloud);
  for (const ulc::Constraint& c : instance.constraints()) {
    image[0] = 0;
    for (std::size_t s = 1; s < cloud; ++s) {
      auto set = static_cast<ulc::ColorSet>(s);
      image[s] = image[set & (set - 1)] | (ulc::ColorSet{1} << c.perm[std::countr_zero(set)]);
    }
    for (std::size_t s1 = 0; s1 < cloud; ++s1) {
      // S2 must avoid the image of S1; enumerate submasks of the complement.
      const ulc::ColorSet allowed = full & ~image[s1];
      for (ulc::ColorSet s2 = allowed;; s2 = (s2 - 1) & allowed) {
        edges.emplace_back(id(c.first, static_cast<ulc::ColorSet>(s1)), id(c.second, s2));
        if (s2 == 0) break;
      }
    }
  }
  if (flavor == Flavor::extended) {
    for (Vertex x = 0; x < instance.num_vars(); ++x) {
      for (std::size_t s1 = 0; s1 < cloud; ++s1) {
        const ulc::ColorSet allowed = full & ~static_cast<ulc::ColorSet>(s1);
        for (ulc::ColorSet s2 = allowed; s2 > s1; s2 = (s2 - 1) & allowed) {
          edges.emplace_back(id(x, static_cast<ulc::ColorSet>(s1)), id(x, s2));
        }
      }
    }
  }
  return GadgetGraph(instance.num_vars(), colors, epsilon, flavor, Graph(instance.num_vars() * cloud, std::move(edges)));
}

IndependentSet independent_set(const GadgetGraph& gadget, const ulc::Planted& planted) {
  if (planted.in_x0.size() != gadget.num_vars() || planted.labelling.size() != gadget.num_vars()) {
    throw InvalidArgument("planted data does not match the gadget");
  }
  IndependentSet out;
  for (Vertex x = 0; x < gadget.num_vars(); ++x) {
    if (!planted.in_x0[x]) continue;
    const ulc::ColorSet label = ulc::ColorSet{1} << planted.labelling[x];
    for (std::size_t s = 0; s < gadget.cloud_size(); ++s) {
      if ((s & label) != 0) out.vertices.push_back(gadget.id(x, static_cast<ulc::ColorSet>(s)));
    }
  }
  auto in = membership(gadget.graph().num_vertices(), out.vertices);
  for (const Edge& e : gadget.graph().edges()) {
    if (in[e.u] && in[e.v]) {
      throw InternalError("independent set contains edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
  }
  out.weight = gadget.set_weight(out.vertices);
  return out;
}

Matching yes_matching(const GadgetGraph& gadget, const ulc::Planted& planted) {
  if (gadget.flavor() != Flavor::extended) throw InvalidArgument("yes_matching needs the extended gadget");
  if (gadget.num_colors() < 2) throw InvalidArgument("yes_matching needs at least two colors");
  if (planted.in_x0.size() != gadget.num_vars() || planted.labelling.size() != gadget.num_vars()) {
    throw InvalidArgument("planted data does not match the gadget");
  }
  Matching matching;
  std::vector<bool> used(gadget.graph().num_vertices(), false);
  for (Vertex x = 0; x < gadget.num_vars(); ++x) {
    const ulc::ColorSet ground =
        planted.in_x0[x] ? gadget.full_set() & ~(ulc::ColorSet{1} << planted.labelling[x]) : gadget.full_set();
    for (ulc::ColorSet s = 0; s <= ground; ++s) {
      if ((s & ~ground) != 0) continue;
      const ulc::ColorSet partner = ground & ~s;
      if (partner < s) continue;
      if (partner == s) throw InternalError("complement pairing collided with itself");
      Vertex a = gadget.id(x, s);
      Vertex b = gadget.id(x, partner);
      if (used[a] || used[b]) throw InternalError("complement pairing reused a vertex");
      used[a] = used[b] = true;
      matching.emplace_back(a, b);
    }
  }
  std::sort(matching.begin(), matching.end());
  return matching;
}

Rational matching_weight(const GadgetGraph& gadget, std::span<const Edge> matching, EdgeRule rule) {
  Rational total = 0;
  for (const Edge& e : matching) total += gadget.edge_weight(e.u, e.v, rule);
  return total;
}

std::vector<Rational> edge_weights(const GadgetGraph& gadget, EdgeRule rule) {
  std::vector<Rational> out;
  out.reserve(gadget.graph().num_edges());
  for (const Edge& e : gadget.graph().edges()) out.push_back(gadget.edge_weight(e.u, e.v, rule));
  return out;
}

}  // namespace mmm::gadget
