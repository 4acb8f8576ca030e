#include "doctest.h"

#include <bit>

#include "mmm/errors.hpp"
#include "mmm/kneser.hpp"

using namespace mmm;
using namespace mmm::kneser;

TEST_CASE("bipartite Kneser sizes and regularity") {
  struct Case { unsigned n, k; std::size_t vertices, degree; };
  for (Case c : {Case{3, 1, 6, 2}, Case{4, 1, 8, 3}, Case{5, 2, 20, 3}, Case{7, 3, 70, 4}, Case{6, 2, 30, 6}}) {
    auto b = build_bipartite_kneser(c.n, c.k);
    CHECK(b.graph().num_vertices() == c.vertices);
    CHECK(b.side_size() == binomial(c.n, c.k));
    for (Vertex v = 0; v < b.graph().num_vertices(); ++v) CHECK(b.graph().degree(v) == c.degree);
    CHECK(binomial(c.n - c.k, c.k) == c.degree);
    for (const Edge& e : b.graph().edges()) {
      CHECK(b.is_left(e.u) != b.is_left(e.v));
      CHECK((b.subset_of(e.u) & b.subset_of(e.v)) == 0);
    }
  }
  CHECK(build_bipartite_kneser(3, 1).graph().num_edges() == 6);
  CHECK_THROWS_AS(build_bipartite_kneser(4, 2), InvalidArgument);
  CHECK_THROWS_AS(build_bipartite_kneser(4, 0), InvalidArgument);
}

TEST_CASE("Hamiltonian cycle of B(3,1)") {
  auto b = build_bipartite_kneser(3, 1);
  const auto& cycle = hamiltonian_cycle(b);
  // {1}^L,{2}^R,{3}^L,{1}^R,{2}^L,{3}^R in one-based color names.
  HamCycle expected{0, 4, 2, 3, 1, 5};
  CHECK(cycle == expected);
  CHECK(is_hamiltonian_cycle(b.graph(), cycle));
}

TEST_CASE("Hamiltonian cycles over the desk-scale range") {
  for (unsigned n = 3; n <= 10; ++n) {
    for (unsigned k = 1; 2 * k < n; ++k) {
      auto b = build_bipartite_kneser(n, k);
      const auto& cycle = hamiltonian_cycle(b);
      CHECK(cycle.size() == 2 * b.side_size());
      CHECK(is_hamiltonian_cycle(b.graph(), cycle));
      // Every underlying set is incident to exactly four cycle edges.
      std::vector<int> incidences(b.side_size(), 0);
      for (Vertex v : cycle) incidences[v % b.side_size()] += 2;
      for (int c : incidences) CHECK(c == 4);
      CHECK(&hamiltonian_cycle(b) == &cycle);
    }
  }
}

TEST_CASE("validator rejects broken cycles") {
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::vector<Vertex> good{0, 1, 2, 3};
  std::vector<Vertex> skip{0, 2, 1, 3};
  std::vector<Vertex> repeat{0, 1, 0, 3};
  std::vector<Vertex> short_cycle{0, 1, 2};
  CHECK(is_hamiltonian_cycle(c4, good));
  CHECK_FALSE(is_hamiltonian_cycle(c4, skip));
  CHECK_FALSE(is_hamiltonian_cycle(c4, repeat));
  CHECK_FALSE(is_hamiltonian_cycle(c4, short_cycle));
}

TEST_CASE("cycle_in_subgraph examples") {
  auto all = [](Vertex, Vertex) { return true; };
  std::vector<Vertex> tri{10, 20, 30};
  auto t = cycle_in_subgraph(tri, all);
  REQUIRE(t);
  CHECK(t->size() == 3);

  std::vector<Vertex> square{0, 1, 2, 3};
  auto c4 = [](Vertex a, Vertex b) { return (a + 1) % 4 == b || (b + 1) % 4 == a; };
  auto s = cycle_in_subgraph(square, c4);
  REQUIRE(s);
  CHECK(s->size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(c4((*s)[i], (*s)[(i + 1) % 4]));

  std::vector<Vertex> path{0, 1, 2};
  auto p3 = [](Vertex a, Vertex b) { return a + 1 == b || b + 1 == a; };
  CHECK_FALSE(cycle_in_subgraph(path, p3));

  std::vector<Vertex> two{0, 1};
  CHECK_THROWS_AS(cycle_in_subgraph(two, all), InvalidArgument);
}

TEST_CASE("search budget is enforced") {
  // Petersen graph has no Hamiltonian cycle; a tiny node limit must trip first.
  Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
  CHECK_FALSE(find_hamiltonian_cycle(petersen));
  CHECK_THROWS_AS(find_hamiltonian_cycle(petersen, {.node_limit = 3}), BudgetExceeded);
}
