#include "doctest.h"

#include <bit>

#include "mmm/errors.hpp"
#include "mmm/gadget.hpp"

using namespace mmm;
using namespace mmm::gadget;

namespace {

// Setup A: three variables on a cycle, two colors, epsilon 1/4, X0 = all.
ulc::UlcInstance setup_a() {
  return ulc::generate_yes({.num_vars = 3, .num_colors = 2, .xi = 0, .topology = ulc::Topology::cycle, .seed = 1});
}

// Oracle for the adjacency rule, written directly from the definition.
bool oracle_adjacent(const ulc::UlcInstance& inst, Flavor flavor, Vertex x1, ulc::ColorSet s1, Vertex x2,
                     ulc::ColorSet s2) {
  if (x1 == x2) return flavor == Flavor::extended && s1 != s2 && (s1 & s2) == 0;
  if (!inst.has_edge(x1, x2)) return false;
  const auto& perm = inst.oriented(x1, x2);
  for (ulc::Color r = 0; r < inst.num_colors(); ++r) {
    if ((s1 >> r & 1) && (s2 >> perm[r] & 1)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("mu examples") {
  const Rational eps(1, 4);
  CHECK(mu(3, 2, eps, 0) == Rational(3, 16));
  CHECK(mu(3, 2, eps, 1) == Rational(1, 16));
  CHECK(mu(3, 2, eps, 2) == Rational(1, 48));
  CHECK_THROWS_AS(mu(3, 2, Rational(0), 0), InvalidArgument);
  CHECK_THROWS_AS(mu(3, 2, Rational(1, 2), 0), InvalidArgument);
  CHECK_THROWS_AS(mu(3, 2, eps, 3), InvalidArgument);
  for (std::uint32_t colors = 1; colors <= 8; ++colors) {
    for (std::size_t vars = 1; vars <= 5; ++vars) {
      Rational total = 0;
      for (std::uint32_t s = 0; s <= colors; ++s) {
        // binomial multiplicity
        Rational c = 1;
        for (std::uint32_t i = 0; i < s; ++i) c = c * (colors - i) / (i + 1);
        total += c * mu(vars, colors, Rational(1, 8), s) * static_cast<long long>(vars);
        if (s < colors) CHECK(mu(vars, colors, Rational(1, 8), s) > mu(vars, colors, Rational(1, 8), s + 1));
      }
      CHECK(total == 1);
    }
  }
}

TEST_CASE("gadget adjacency on the smallest instance") {
  auto inst = ulc::new_instance(2, 1, {{0, 1, {0}}});
  auto g = build_gadget(inst, Rational(1, 4), Flavor::base);
  CHECK(g.graph().num_vertices() == 4);
  CHECK(g.graph().adjacent(g.id(0, 0), g.id(1, 0)));
  CHECK_FALSE(g.graph().adjacent(g.id(0, 1), g.id(1, 1)));
  CHECK(g.graph().adjacent(g.id(0, 0), g.id(1, 1)));
}

TEST_CASE("extended flavor disjointness edges") {
  auto g = build_gadget(setup_a(), Rational(1, 4), Flavor::extended);
  for (Vertex x = 0; x < 3; ++x) {
    CHECK(g.graph().adjacent(g.id(x, 0b01), g.id(x, 0b10)));
    CHECK_FALSE(g.graph().adjacent(g.id(x, 0b01), g.id(x, 0b11)));
  }
}

TEST_CASE("gadget edges match the definition") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto inst = ulc::generate_yes({.num_vars = 3 + seed % 3, .num_colors = 1 + static_cast<std::uint32_t>(seed % 3),
                                   .xi = Rational(1, 4), .topology = ulc::Topology::random, .p_edge = 0.5, .seed = seed});
    for (auto flavor : {Flavor::base, Flavor::extended}) {
      auto g = build_gadget(inst, Rational(1, 8), flavor);
      CHECK(g.graph().num_vertices() == inst.num_vars() << inst.num_colors());
      CHECK(g.total_weight() == 1);
      std::size_t expected_edges = 0;
      for (Vertex a = 0; a < g.graph().num_vertices(); ++a) {
        for (Vertex b = a + 1; b < g.graph().num_vertices(); ++b) {
          auto va = g.vertex(a);
          auto vb = g.vertex(b);
          bool want = oracle_adjacent(inst, flavor, va.variable, va.subset, vb.variable, vb.subset);
          expected_edges += want;
          if (g.graph().adjacent(a, b) != want) {
            FAIL("adjacency mismatch at " << a << "," << b);
          }
        }
      }
      CHECK(g.graph().num_edges() == expected_edges);
    }
  }
}

TEST_CASE("Setup A weights, independent set and yes matching") {
  auto inst = setup_a();
  const auto& pl = *inst.planted();
  auto g = build_gadget(inst, Rational(1, 4), Flavor::extended);
  CHECK(g.total_weight() == 1);
  auto is = independent_set(g, pl);
  CHECK(is.weight == Rational(1, 4));
  CHECK(is.vertices.size() == 6);
  for (Vertex x = 0; x < 3; ++x) {
    const ulc::ColorSet rx = ulc::ColorSet{1} << pl.labelling[x];
    Rational cloud = 0;
    for (Vertex v : is.vertices) {
      if (g.vertex(v).variable == x) cloud += g.weight(v);
      if (g.vertex(v).variable == x) CHECK((g.vertex(v).subset & rx) != 0);
    }
    CHECK(cloud == g.mu_table()[1] + g.mu_table()[2]);
  }
  auto cover_complement = [&] {
    VertexSet out;
    auto in = membership(g.graph().num_vertices(), is.vertices);
    for (Vertex v = 0; v < g.graph().num_vertices(); ++v) {
      if (!in[v]) out.push_back(v);
    }
    return out;
  }();
  CHECK(verify_vertex_cover(g.graph(), cover_complement).ok);
  auto m = yes_matching(g, pl);
  CHECK(verify_maximal_matching(g.graph(), m).ok);
  CHECK(matched_vertices(m) == cover_complement);
  CHECK(matching_weight(g, m, EdgeRule::plus) == Rational(3, 4));
  CHECK(matching_weight(g, m, EdgeRule::plus) <= Rational(1, 2) + 2 * Rational(1, 4));
  // x in X0 with r_x: the only pair is (empty, R \ {r_x}).
  for (Vertex x = 0; x < 3; ++x) {
    const ulc::ColorSet rest = 0b11 & ~(ulc::ColorSet{1} << pl.labelling[x]);
    CHECK(std::find(m.begin(), m.end(), Edge(g.id(x, 0), g.id(x, rest))) != m.end());
  }
}

TEST_CASE("yes matching outside X0 pairs complements in R") {
  auto inst = ulc::generate_yes({.num_vars = 4, .num_colors = 2, .xi = Rational(1, 4), .seed = 7});
  const auto& pl = *inst.planted();
  auto g = build_gadget(inst, Rational(1, 4), Flavor::extended);
  auto m = yes_matching(g, pl);
  for (Vertex x = 0; x < 4; ++x) {
    if (pl.in_x0[x]) continue;
    CHECK(std::find(m.begin(), m.end(), Edge(g.id(x, 0b00), g.id(x, 0b11))) != m.end());
    CHECK(std::find(m.begin(), m.end(), Edge(g.id(x, 0b01), g.id(x, 0b10))) != m.end());
  }
  CHECK_THROWS_AS(yes_matching(build_gadget(inst, Rational(1, 4), Flavor::base), pl), InvalidArgument);
}

TEST_CASE("weight partition over a sweep") {
  for (std::uint32_t colors = 2; colors <= 5; ++colors) {
    for (std::size_t vars = 3; vars <= 7; ++vars) {
      for (Rational xi : {Rational(0), Rational(1, 4)}) {
        auto inst = ulc::generate_yes({.num_vars = vars, .num_colors = colors, .xi = xi, .seed = vars * 31 + colors});
        const auto& pl = *inst.planted();
        Rational eps(1, 8);
        auto g = build_gadget(inst, eps, Flavor::extended);
        auto is = independent_set(g, pl);
        CHECK(is.weight == Rational(static_cast<long long>(pl.x0_size()), static_cast<long long>(vars)) * g.p());
        auto m = yes_matching(g, pl);
        CHECK(verify_maximal_matching(g.graph(), m).ok);
        CHECK(matching_weight(g, m, EdgeRule::plus) + is.weight == 1);
        if (xi == 0) CHECK(is.weight >= Rational(1, 2) - 2 * eps);
      }
    }
  }
}

TEST_CASE("edge weight rules") {
  auto g = build_gadget(setup_a(), Rational(1, 4), Flavor::extended);
  const Vertex a = g.id(0, 0);
  const Vertex b = g.id(0, 0b11);
  CHECK(g.edge_weight(a, b, EdgeRule::plus) == Rational(3, 16) + Rational(1, 48));
  CHECK(g.edge_weight(a, b, EdgeRule::min) == Rational(1, 48));
  auto ws = edge_weights(g, EdgeRule::min);
  CHECK(ws.size() == g.graph().num_edges());
}
