#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mmm/graph.hpp"
#include "mmm/rational.hpp"

/// Unique Label Cover instances in the Khot-Regev formulation.
namespace mmm::ulc {

using Color = std::uint32_t;
/// Bit-mask set of colors; bit r set iff color r is in the set.
using ColorSet = std::uint32_t;
/// perm[r] is the color forced on the second variable when the first gets r.
using Permutation = std::vector<Color>;

inline constexpr std::uint32_t kMaxColors = 30;

struct Constraint {
  Vertex first = 0;
  Vertex second = 0;
  Permutation perm;
};

/// Planted YES-type certificate: one color per variable and the set X0 on
/// which the labelling satisfies every internal constraint.
struct Planted {
  std::vector<Color> labelling;
  std::vector<bool> in_x0;

  std::size_t x0_size() const;
  VertexSet x0() const;
};

bool is_permutation(const Permutation& perm, std::size_t num_colors);
Permutation invert(const Permutation& perm);

class UlcInstance {
 public:
  UlcInstance() = default;

  std::size_t num_vars() const { return num_vars_; }
  std::uint32_t num_colors() const { return num_colors_; }
  /// Constraints in insertion order, each stored for one orientation.
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::optional<Planted>& planted() const { return planted_; }

  bool has_edge(Vertex a, Vertex b) const { return index_.contains(key(a, b)); }
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  /// Constraint permutation oriented from `from` to `to`.
  const Permutation& oriented(Vertex from, Vertex to) const;
  /// Image of a color set under the oriented constraint.
  ColorSet image(Vertex from, Vertex to, ColorSet set) const;

  /// Returns a copy carrying the planted data; throws if the planted
  /// labelling violates a constraint inside X0.
  UlcInstance with_planted(Planted planted) const;

  bool operator==(const UlcInstance& other) const;

  friend UlcInstance new_instance(std::size_t, std::uint32_t, std::vector<Constraint>);

 private:
  static std::pair<Vertex, Vertex> key(Vertex a, Vertex b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

  std::size_t num_vars_ = 0;
  std::uint32_t num_colors_ = 0;
  std::vector<Constraint> constraints_;
  std::vector<Permutation> inverse_;
  std::map<std::pair<Vertex, Vertex>, std::size_t> index_;
  std::optional<Planted> planted_;
};

/// Validated constructor. Rejects non-bijective permutations, dangling
/// variable indices, self-constraints, duplicate edges and |R| > 30.
UlcInstance new_instance(std::size_t num_vars, std::uint32_t num_colors, std::vector<Constraint> constraints);

enum class Topology { cycle, complete, random };

struct GenerateOptions {
  std::size_t num_vars = 3;
  std::uint32_t num_colors = 2;
  Rational xi = 0;
  Topology topology = Topology::cycle;
  double p_edge = 0.5;  // only for Topology::random
  std::uint64_t seed = 1;
};

/// Planted YES instance with |X0| = num_vars - floor(xi * num_vars).
///
/// The constraint graph always contains the Hamiltonian cycle 0-1-...-(n-1)-0,
/// a cycle through each of X0 and X\X0 (when that class has at least three
/// members), an edge joining a two-member class, and, when one class is a
/// single variable, edges from that variable to every member of the other
/// class. These guarantee the empty-set vertices of each class can be
/// saturated by the fractional matching construction.
UlcInstance generate_yes(const GenerateOptions& options);

struct LabellingReport {
  std::vector<std::size_t> satisfied;  // constraint indices
  std::vector<std::size_t> violated;
};

/// Checks constraints with both endpoints in `subset`. Throws
/// InvalidArgument if the labelling misses a subset variable.
LabellingReport check_labelling(const UlcInstance& instance, const std::vector<std::optional<Color>>& labelling,
                                const VertexSet& subset);

struct TLabelling {
  std::uint32_t t = 1;
  std::vector<std::optional<ColorSet>> assignment;
};

/// Throws InvalidArgument unless every assigned set has exactly t colors from R.
void validate(const TLabelling& labelling, std::uint32_t num_colors);

/// A constraint is satisfied iff some r in L(first) maps into L(second).
LabellingReport check_t_labelling(const UlcInstance& instance, const TLabelling& labelling, const VertexSet& subset);

}  // namespace mmm::ulc
