#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mmm/gadget.hpp"
#include "mmm/kneser.hpp"

/// Fractional matchings on (G'_Phi, w_min) that saturate everything outside the planted independent set.
namespace mmm::fracmatch {

enum class Strategy { hamiltonian, uniform };

/// Edge -> nonnegative exact value. Zero entries are never stored.
class FractionalMatching {
 public:
  void add(Edge e, const Rational& value);
  Rational value(Edge e) const;
  const std::map<Edge, Rational>& values() const { return values_; }
  std::size_t support_size() const { return values_.size(); }

  FractionalMatching& operator+=(const FractionalMatching& other);
  bool operator==(const FractionalMatching& other) const { return values_ == other.values_; }

 private:
  std::map<Edge, Rational> values_;
};

FractionalMatching operator+(FractionalMatching a, const FractionalMatching& b);

/// Per-vertex data for one cloud: which colors form the ground set the
/// complement pairing works inside (R, or R \ {r_x} for x in X0).
struct CloudGround {
  ulc::ColorSet ground = 0;
  unsigned size = 0;
  /// Colors of the ground set in increasing order; position i of a Kneser subset maps to colors[i].
  std::vector<ulc::Color> colors;
};

CloudGround cloud_ground(const gadget::GadgetGraph& gadget, const ulc::Planted& planted, Vertex variable);

/// Maps a subset of {0..ground.size-1} onto actual colors.
ulc::ColorSet lift(const CloudGround& ground, std::uint32_t local_subset);

/// How the (x, empty) vertices are saturated: one group per variable class
/// (X0 and X \ X0). A group of at least three members uses a Hamiltonian
/// cycle of its induced subgraph; two members use their single edge. A class
/// of exactly one variable is attached as a hub to the other group: it is
/// joined to every member, and each cycle edge hands part of its value to the
/// hub edges at its two endpoints.
struct EmptyGroup {
  std::vector<Vertex> cycle;  // gadget ids of (x, empty), in cycle order
  Rational deficit;           // per member, beyond what F0 already supplies
  std::optional<Vertex> hub;
  Rational hub_deficit;
  /// Edges carrying the group's value: the closed cycle, or the single pair edge.
  std::vector<Edge> cycle_edges() const;
};

/// Throws InvalidArgument when a class cannot be saturated, with the hint
/// "need >= 2 variables per class" for an unattachable singleton.
std::vector<EmptyGroup> plan_empty_groups(const gadget::GadgetGraph& gadget, const ulc::Planted& planted,
                                          const kneser::SearchOptions& options = {});

FractionalMatching build_f0(const gadget::GadgetGraph& gadget, const ulc::Planted& planted);
FractionalMatching build_f1(const gadget::GadgetGraph& gadget, const ulc::Planted& planted, Strategy strategy);
FractionalMatching build_f2(const gadget::GadgetGraph& gadget, const ulc::Planted& planted);
FractionalMatching build_full(const gadget::GadgetGraph& gadget, const ulc::Planted& planted,
                              Strategy strategy = Strategy::hamiltonian);

struct SaturationReport {
  std::vector<Rational> load;  // indexed by gadget vertex
  VertexSet saturated;
  std::vector<std::pair<Vertex, Rational>> unsaturated;  // vertex, weight - load
  bool capacity_ok = true;
  bool budget_ok = true;
  bool support_ok = true;
  std::vector<Edge> capacity_violations;
  VertexSet budget_violations;
  std::vector<Edge> foreign_edges;

  bool valid() const { return capacity_ok && budget_ok && support_ok; }
};

/// Exact verdicts against the w_min capacities and vertex weights.
SaturationReport validate(const gadget::GadgetGraph& gadget, const FractionalMatching& fm);

}  // namespace mmm::fracmatch
