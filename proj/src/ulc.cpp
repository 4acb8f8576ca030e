#include "mmm/ulc.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "mmm/errors.hpp"

namespace mmm::ulc {

std::size_t Planted::x0_size() const { return static_cast<std::size_t>(std::count(in_x0.begin(), in_x0.end(), true)); }

VertexSet Planted::x0() const {
  VertexSet out;
  for (std::size_t x = 0; x < in_x0.size(); ++x) {
    if (in_x0[x]) out.push_back(static_cast<Vertex>(x));
  }
  return out;
}

bool is_permutation(const Permutation& perm, std::size_t num_colors) {
  if (perm.size() != num_colors) return false;
  std::vector<bool> seen(num_colors, false);
  for (Color c : perm) {
    if (c >= num_colors || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

Permutation invert(const Permutation& perm) {
  Permutation inv(perm.size());
  for (std::size_t r = 0; r < perm.size(); ++r) inv[perm[r]] = static_cast<Color>(r);
  return inv;
}

UlcInstance new_instance(std::size_t num_vars, std::uint32_t num_colors, std::vector<Constraint> constraints) {
  if (num_colors == 0) throw InvalidArgument("color set must be non-empty");
  if (num_colors > kMaxColors) {
    throw InvalidArgument("at most " + std::to_string(kMaxColors) + " colors are supported");
  }
  UlcInstance inst;
  inst.num_vars_ = num_vars;
  inst.num_colors_ = num_colors;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const Constraint& c = constraints[i];
    if (c.first >= num_vars || c.second >= num_vars) {
      throw InvalidArgument("constraint " + std::to_string(i) + " references a missing variable");
    }
    if (c.first == c.second) throw InvalidArgument("constraint " + std::to_string(i) + " joins a variable to itself");
    if (!is_permutation(c.perm, num_colors)) {
      throw InvalidArgument("constraint " + std::to_string(i) + " is not a bijection on the color set");
    }
    auto [it, inserted] = inst.index_.emplace(UlcInstance::key(c.first, c.second), i);
    if (!inserted) {
      throw InvalidArgument("duplicate edge {" + std::to_string(c.first) + "," + std::to_string(c.second) + "}");
    }
    inst.inverse_.push_back(invert(c.perm));
  }
  inst.constraints_ = std::move(constraints);
  return inst;
}

std::optional<std::size_t> UlcInstance::edge_index(Vertex a, Vertex b) const {
  auto it = index_.find(key(a, b));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Permutation& UlcInstance::oriented(Vertex from, Vertex to) const {
  auto idx = edge_index(from, to);
  if (!idx) throw InvalidArgument("no constraint between " + std::to_string(from) + " and " + std::to_string(to));
  return constraints_[*idx].first == from ? constraints_[*idx].perm : inverse_[*idx];
}

ColorSet UlcInstance::image(Vertex from, Vertex to, ColorSet set) const {
  const Permutation& perm = oriented(from, to);
  ColorSet out = 0;
  for (ColorSet rest = set; rest != 0; rest &= rest - 1) {
    out |= ColorSet{1} << perm[std::countr_zero(rest)];
  }
  return out;
}

UlcInstance UlcInstance::with_planted(Planted planted) const {
  if (planted.labelling.size() != num_vars_ || planted.in_x0.size() != num_vars_) {
    throw InvalidArgument("planted data must cover every variable");
  }
  for (Color c : planted.labelling) {
    if (c >= num_colors_) throw InvalidArgument("planted color out of range");
  }
  for (const Constraint& c : constraints_) {
    if (planted.in_x0[c.first] && planted.in_x0[c.second] && c.perm[planted.labelling[c.first]] != planted.labelling[c.second]) {
      throw InvalidArgument("planted labelling violates constraint {" + std::to_string(c.first) + "," +
                            std::to_string(c.second) + "} inside X0");
    }
  }
  UlcInstance copy = *this;
  copy.planted_ = std::move(planted);
  return copy;
}

bool UlcInstance::operator==(const UlcInstance& other) const {
  if (num_vars_ != other.num_vars_ || num_colors_ != other.num_colors_) return false;
  if (constraints_.size() != other.constraints_.size()) return false;
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const auto& a = constraints_[i];
    const auto& b = other.constraints_[i];
    if (a.first != b.first || a.second != b.second || a.perm != b.perm) return false;
  }
  if (planted_.has_value() != other.planted_.has_value()) return false;
  if (planted_) {
    return planted_->labelling == other.planted_->labelling && planted_->in_x0 == other.planted_->in_x0;
  }
  return true;
}

namespace {

void add_class_edges(const VertexSet& members, std::set<std::pair<Vertex, Vertex>>& edges) {
  auto add = [&](Vertex a, Vertex b) { edges.insert(a < b ? std::pair{a, b} : std::pair{b, a}); };
  if (members.size() == 2) {
    add(members[0], members[1]);
  } else if (members.size() >= 3) {
    for (std::size_t i = 0; i < members.size(); ++i) add(members[i], members[(i + 1) % members.size()]);
  }
}

}  // namespace

UlcInstance generate_yes(const GenerateOptions& options) {
  const std::size_t n = options.num_vars;
  if (n < 3) throw InvalidArgument("generate_yes needs at least 3 variables");
  if (options.num_colors == 0 || options.num_colors > kMaxColors) {
    throw InvalidArgument("color count must be in [1, " + std::to_string(kMaxColors) + "]");
  }
  if (options.xi < 0 || options.xi >= 1) throw InvalidArgument("xi must lie in [0, 1)");
  if (options.topology == Topology::random && !(options.p_edge >= 0.0 && options.p_edge <= 1.0)) {
    throw InvalidArgument("p_edge must lie in [0, 1]");
  }
  Rational outside_exact = options.xi * static_cast<long long>(n);
  auto outside = static_cast<std::size_t>(numerator(outside_exact) / denominator(outside_exact));
  if (outside >= n) throw InvalidArgument("parameters leave X0 empty");

  std::mt19937_64 rng(options.seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);

  Planted planted;
  planted.in_x0.assign(n, true);
  for (std::size_t i = 0; i < outside; ++i) planted.in_x0[order[i]] = false;
  std::uniform_int_distribution<Color> color_dist(0, options.num_colors - 1);
  planted.labelling.resize(n);
  for (auto& c : planted.labelling) c = color_dist(rng);

  std::set<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    auto a = static_cast<Vertex>(i);
    auto b = static_cast<Vertex>((i + 1) % n);
    edges.insert(a < b ? std::pair{a, b} : std::pair{b, a});
  }
  VertexSet inside_class;
  VertexSet outside_class;
  for (std::size_t x = 0; x < n; ++x) (planted.in_x0[x] ? inside_class : outside_class).push_back(static_cast<Vertex>(x));
  add_class_edges(inside_class, edges);
  add_class_edges(outside_class, edges);
  auto attach_hub = [&](const VertexSet& hub, const VertexSet& other) {
    if (hub.size() != 1 || other.size() < 2) return;
    for (Vertex v : other) edges.insert(hub[0] < v ? std::pair{hub[0], v} : std::pair{v, hub[0]});
  };
  attach_hub(inside_class, outside_class);
  attach_hub(outside_class, inside_class);

  if (options.topology == Topology::complete) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) edges.insert({a, b});
    }
  } else if (options.topology == Topology::random) {
    std::bernoulli_distribution coin(options.p_edge);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (coin(rng)) edges.insert({a, b});
      }
    }
  }

  std::vector<Constraint> constraints;
  constraints.reserve(edges.size());
  for (auto [a, b] : edges) {
    Permutation perm(options.num_colors);
    std::iota(perm.begin(), perm.end(), Color{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    if (planted.in_x0[a] && planted.in_x0[b]) {
      Color from = planted.labelling[a];
      Color to = planted.labelling[b];
      auto pos = static_cast<std::size_t>(std::find(perm.begin(), perm.end(), to) - perm.begin());
      std::swap(perm[pos], perm[from]);
    }
    constraints.push_back({a, b, std::move(perm)});
  }
  return new_instance(n, options.num_colors, std::move(constraints)).with_planted(std::move(planted));
}

namespace {

template <typename Satisfied>
LabellingReport scan_constraints(const UlcInstance& instance, const VertexSet& subset, Satisfied&& satisfied) {
  std::vector<bool> in(instance.num_vars(), false);
  for (Vertex x : subset) {
    if (x >= instance.num_vars()) throw InvalidArgument("subset variable out of range");
    in[x] = true;
  }
  LabellingReport report;
  const auto& cons = instance.constraints();
  for (std::size_t i = 0; i < cons.size(); ++i) {
    if (!in[cons[i].first] || !in[cons[i].second]) continue;
    (satisfied(cons[i]) ? report.satisfied : report.violated).push_back(i);
  }
  return report;
}

}  // namespace

LabellingReport check_labelling(const UlcInstance& instance, const std::vector<std::optional<Color>>& labelling,
                                const VertexSet& subset) {
  for (Vertex x : subset) {
    if (x >= labelling.size() || !labelling[x]) {
      throw InvalidArgument("labelling missing subset variable " + std::to_string(x));
    }
    if (*labelling[x] >= instance.num_colors()) throw InvalidArgument("label out of range");
  }
  return scan_constraints(instance, subset, [&](const Constraint& c) {
    return c.perm[*labelling[c.first]] == *labelling[c.second];
  });
}

void validate(const TLabelling& labelling, std::uint32_t num_colors) {
  if (labelling.t == 0) throw InvalidArgument("t must be positive");
  const ColorSet universe = num_colors >= 32 ? ~ColorSet{0} : (ColorSet{1} << num_colors) - 1;
  for (std::size_t x = 0; x < labelling.assignment.size(); ++x) {
    const auto& s = labelling.assignment[x];
    if (!s) continue;
    if ((*s & ~universe) != 0) throw InvalidArgument("t-labelling uses a color outside R");
    if (static_cast<std::uint32_t>(std::popcount(*s)) != labelling.t) {
      throw InvalidArgument("t-labelling set of variable " + std::to_string(x) + " has the wrong size");
    }
  }
}

LabellingReport check_t_labelling(const UlcInstance& instance, const TLabelling& labelling, const VertexSet& subset) {
  validate(labelling, instance.num_colors());
  for (Vertex x : subset) {
    if (x >= labelling.assignment.size() || !labelling.assignment[x]) {
      throw InvalidArgument("t-labelling missing subset variable " + std::to_string(x));
    }
  }
  return scan_constraints(instance, subset, [&](const Constraint& c) {
    return (instance.image(c.first, c.second, *labelling.assignment[c.first]) & *labelling.assignment[c.second]) != 0;
  });
}

}  // namespace mmm::ulc
