#pragma once

#include <cstdint>
#include <vector>

#include "mmm/graph.hpp"
#include "mmm/rational.hpp"
#include "mmm/ulc.hpp"

/// Weighted reduction graphs built over clouds of color subsets.
namespace mmm::gadget {

enum class Flavor { base, extended };
enum class EdgeRule { plus, min };

struct GadgetVertex {
  Vertex variable = 0;
  ulc::ColorSet subset = 0;
};

/// Vertex weight (1/|X|) p^s (1-p)^(|R|-s), p = 1/2 - epsilon.
/// Throws InvalidArgument unless 0 < epsilon < 1/2 and set_size <= num_colors.
Rational mu(std::size_t num_vars, std::uint32_t num_colors, const Rational& epsilon, std::uint32_t set_size);

/// Vertex (x, S) has id x * 2^|R| + S: variable-major, subset-as-integer minor.
class GadgetGraph {
 public:
  GadgetGraph() = default;
  /// Assembles a gadget from stored parts (used by import); weights are recomputed from epsilon.
  GadgetGraph(std::size_t num_vars, std::uint32_t num_colors, Rational epsilon, Flavor flavor, Graph graph);

  std::size_t num_vars() const { return num_vars_; }
  std::uint32_t num_colors() const { return num_colors_; }
  std::size_t cloud_size() const { return std::size_t{1} << num_colors_; }
  const Rational& epsilon() const { return epsilon_; }
  Rational p() const { return Rational(1, 2) - epsilon_; }
  Flavor flavor() const { return flavor_; }
  const Graph& graph() const { return graph_; }
  ulc::ColorSet full_set() const { return static_cast<ulc::ColorSet>(cloud_size() - 1); }

  Vertex id(Vertex variable, ulc::ColorSet subset) const {
    return static_cast<Vertex>((static_cast<std::size_t>(variable) << num_colors_) | subset);
  }
  GadgetVertex vertex(Vertex id) const { return {static_cast<Vertex>(id >> num_colors_), static_cast<ulc::ColorSet>(id & full_set())}; }

  /// mu(|S|) for every set size 0..|R|.
  const std::vector<Rational>& mu_table() const { return mu_; }
  const Rational& weight(Vertex v) const;
  Rational edge_weight(Vertex a, Vertex b, EdgeRule rule) const;
  Rational set_weight(std::span<const Vertex> vertices) const;
  Rational total_weight() const;

  bool operator==(const GadgetGraph& other) const;

 private:
  std::size_t num_vars_ = 0;
  std::uint32_t num_colors_ = 0;
  Rational epsilon_;
  Flavor flavor_ = Flavor::base;
  std::vector<Rational> mu_;
  Graph graph_;
};

/// Cross-cloud edges join (x1,S1),(x2,S2) when {x1,x2} is constrained and no
/// r in S1 maps into S2. The extended flavor adds (x,S1)~(x,S2) for disjoint
/// S1 != S2. Throws InvalidArgument beyond 30 colors or when the vertex count
/// would overflow the id range.
GadgetGraph build_gadget(const ulc::UlcInstance& instance, const Rational& epsilon, Flavor flavor);

struct IndependentSet {
  VertexSet vertices;
  Rational weight;
};

/// {(x,S) : x in X0, r_x in S}. Scans every gadget edge to confirm
/// independence and throws InternalError if one is found inside the set.
IndependentSet independent_set(const GadgetGraph& gadget, const ulc::Planted& planted);

/// M0 u M1: for x in X0 pair S1 ⊎ S2 = R \ {r_x}; for x outside X0 pair
/// S1 ⊎ S2 = R. Requires the extended flavor and at least two colors.
///
/// The written statement of M1 carries the condition "x in X0"; the matching
/// here uses x outside X0, which is what the surrounding argument needs.
Matching yes_matching(const GadgetGraph& gadget, const ulc::Planted& planted);

Rational matching_weight(const GadgetGraph& gadget, std::span<const Edge> matching, EdgeRule rule);

/// Per-edge weights in graph().edges() order.
std::vector<Rational> edge_weights(const GadgetGraph& gadget, EdgeRule rule);

}  // namespace mmm::gadget
