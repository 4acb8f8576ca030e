#include "doctest.h"

#include <algorithm>
#include <random>

#include "mmm/errors.hpp"
#include "mmm/ulc.hpp"

using namespace mmm;
using namespace mmm::ulc;

TEST_CASE("new_instance examples") {
  auto inst = new_instance(2, 2, {{0, 1, {0, 1}}});
  CHECK(inst.constraints().size() == 1);
  CHECK(inst.has_edge(1, 0));
  CHECK_FALSE(inst.planted());

  auto tri = new_instance(3, 2, {{0, 1, {1, 0}}, {1, 2, {1, 0}}, {0, 2, {1, 0}}});
  CHECK(tri.constraints().size() == 3);

  try {
    new_instance(2, 2, {{0, 1, {0, 0}}});
    FAIL("expected rejection");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("not a bijection") != std::string::npos);
  }
  CHECK_THROWS_AS(new_instance(2, 2, {{0, 5, {0, 1}}}), InvalidArgument);
  CHECK_THROWS_AS(new_instance(2, 2, {{0, 1, {0, 1}}, {1, 0, {1, 0}}}), InvalidArgument);
  CHECK_THROWS_AS(new_instance(2, 31, {}), InvalidArgument);
}

TEST_CASE("orientation round trip") {
  auto inst = new_instance(2, 3, {{0, 1, {2, 0, 1}}});
  for (Color r = 0; r < 3; ++r) {
    CHECK(inst.oriented(1, 0)[inst.oriented(0, 1)[r]] == r);
  }
  CHECK(inst.image(0, 1, 0b001) == 0b100);
  CHECK(inst.image(1, 0, 0b100) == 0b001);
}

TEST_CASE("check_labelling examples") {
  auto id = new_instance(2, 2, {{0, 1, {0, 1}}});
  std::vector<std::optional<Color>> zeros{0u, 0u};
  auto r = check_labelling(id, zeros, {0, 1});
  CHECK(r.satisfied.size() == 1);
  CHECK(r.violated.empty());

  auto swap = new_instance(2, 2, {{0, 1, {1, 0}}});
  r = check_labelling(swap, zeros, {0, 1});
  CHECK(r.violated.size() == 1);

  std::vector<std::optional<Color>> partial{0u, std::nullopt};
  CHECK_THROWS_AS(check_labelling(id, partial, {0, 1}), InvalidArgument);
}

TEST_CASE("check_t_labelling examples") {
  auto id = new_instance(2, 3, {{0, 1, {0, 1, 2}}});
  TLabelling full{3, {0b111u, 0b111u}};
  CHECK(check_t_labelling(id, full, {0, 1}).violated.empty());
  TLabelling apart{1, {0b001u, 0b010u}};
  CHECK(check_t_labelling(id, apart, {0, 1}).violated.size() == 1);
  TLabelling wrong_size{2, {0b001u, 0b011u}};
  CHECK_THROWS_AS(validate(wrong_size, 3), InvalidArgument);
}

TEST_CASE("generate_yes examples") {
  auto a = generate_yes({.num_vars = 3, .num_colors = 2, .xi = 0, .topology = Topology::cycle, .seed = 1});
  REQUIRE(a.planted());
  CHECK(a.planted()->x0_size() == 3);
  std::vector<std::optional<Color>> lab(a.planted()->labelling.begin(), a.planted()->labelling.end());
  CHECK(check_labelling(a, lab, a.planted()->x0()).violated.empty());

  auto b = generate_yes({.num_vars = 4, .num_colors = 2, .xi = Rational(1, 4), .topology = Topology::cycle, .seed = 7});
  CHECK(b.planted()->x0_size() == 3);
  std::vector<std::optional<Color>> lab_b(b.planted()->labelling.begin(), b.planted()->labelling.end());
  CHECK(check_labelling(b, lab_b, b.planted()->x0()).violated.empty());

  auto c = generate_yes({.num_vars = 3, .num_colors = 3, .xi = 0, .topology = Topology::complete, .seed = 2});
  CHECK(c.constraints().size() == 3);
  for (const auto& con : c.constraints()) {
    CHECK(con.perm[c.planted()->labelling[con.first]] == c.planted()->labelling[con.second]);
  }

  CHECK_THROWS_AS(generate_yes({.num_vars = 2}), InvalidArgument);
  CHECK_THROWS_AS(generate_yes({.num_vars = 3, .xi = 1}), InvalidArgument);
}

TEST_CASE("generate_yes properties over seeds") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (auto topo : {Topology::cycle, Topology::complete, Topology::random}) {
      const std::size_t n = 3 + seed % 8;
      auto inst = generate_yes({.num_vars = n, .num_colors = 1 + static_cast<std::uint32_t>(seed % 4),
                                .xi = Rational(1, 4), .topology = topo, .p_edge = 0.3, .seed = seed});
      const auto& pl = *inst.planted();
      CHECK(pl.x0_size() == n - n / 4);
      // Hamiltonian cycle over all variables.
      for (Vertex v = 0; v < n; ++v) CHECK(inst.has_edge(v, static_cast<Vertex>((v + 1) % n)));
      std::vector<std::optional<Color>> lab(pl.labelling.begin(), pl.labelling.end());
      CHECK(check_labelling(inst, lab, pl.x0()).violated.empty());
      for (const auto& con : inst.constraints()) {
        CHECK(is_permutation(con.perm, inst.num_colors()));
        auto inv = invert(con.perm);
        for (Color r = 0; r < inst.num_colors(); ++r) CHECK(inv[con.perm[r]] == r);
      }
      // Same seed, same instance.
      auto again = generate_yes({.num_vars = n, .num_colors = 1 + static_cast<std::uint32_t>(seed % 4),
                                 .xi = Rational(1, 4), .topology = topo, .p_edge = 0.3, .seed = seed});
      CHECK(again == inst);
    }
  }
}

TEST_CASE("t = 1 labelling agrees with plain labelling") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    auto inst = generate_yes({.num_vars = 6, .num_colors = 3, .xi = Rational(1, 2), .topology = Topology::complete,
                              .seed = static_cast<std::uint64_t>(round)});
    std::vector<std::optional<Color>> lab(6);
    TLabelling t{1, std::vector<std::optional<ColorSet>>(6)};
    for (Vertex v = 0; v < 6; ++v) {
      Color c = static_cast<Color>(rng() % 3);
      lab[v] = c;
      t.assignment[v] = ColorSet{1} << c;
    }
    VertexSet all{0, 1, 2, 3, 4, 5};
    auto a = check_labelling(inst, lab, all);
    auto b = check_t_labelling(inst, t, all);
    CHECK(a.satisfied == b.satisfied);
    CHECK(a.violated == b.violated);
  }
}

TEST_CASE("with_planted rejects an inconsistent labelling") {
  auto swap = new_instance(2, 2, {{0, 1, {1, 0}}});
  CHECK_THROWS_AS(swap.with_planted({{0, 0}, {true, true}}), InvalidArgument);
  CHECK(swap.with_planted({{0, 1}, {true, true}}).planted());
}
