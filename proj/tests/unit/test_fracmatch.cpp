#include "doctest.h"

#include <bit>

#include "mmm/errors.hpp"
#include "mmm/fracmatch.hpp"

using namespace mmm;
using namespace mmm::fracmatch;
using gadget::Flavor;

namespace {

struct Fixture {
  ulc::UlcInstance instance;
  ulc::Planted planted;
  gadget::GadgetGraph g;
};

Fixture make(std::size_t vars, std::uint32_t colors, Rational eps, Rational xi, std::uint64_t seed,
             ulc::Topology topo = ulc::Topology::cycle) {
  auto inst = ulc::generate_yes({.num_vars = vars, .num_colors = colors, .xi = xi, .topology = topo, .seed = seed});
  auto pl = *inst.planted();
  auto g = gadget::build_gadget(inst, eps, Flavor::extended);
  return {std::move(inst), std::move(pl), std::move(g)};
}

// Loads computed straight from the edge values, independent of validate().
std::vector<Rational> loads(const gadget::GadgetGraph& g, const FractionalMatching& fm) {
  std::vector<Rational> out(g.graph().num_vertices(), Rational(0));
  for (const auto& [e, x] : fm.values()) {
    out[e.u] += x;
    out[e.v] += x;
  }
  return out;
}

}  // namespace

TEST_CASE("F0 on Setup A style clouds") {
  auto f = make(3, 2, Rational(1, 4), 0, 1);
  // Treat every variable as outside X0.
  ulc::Planted outside{f.planted.labelling, {false, false, false}};
  auto f0 = build_f0(f.g, outside);
  CHECK(f0.value(Edge(f.g.id(0, 0b00), f.g.id(0, 0b11))) == Rational(1, 48));
  CHECK(f0.value(Edge(f.g.id(0, 0b01), f.g.id(0, 0b10))) == Rational(1, 16));
  CHECK(f0.support_size() == 6);

  auto f0_in = build_f0(f.g, f.planted);
  CHECK(f0_in.support_size() == 3);
  for (Vertex x = 0; x < 3; ++x) {
    const ulc::ColorSet rest = 0b11 & ~(ulc::ColorSet{1} << f.planted.labelling[x]);
    CHECK(f0_in.value(Edge(f.g.id(x, 0), f.g.id(x, rest))) == Rational(1, 16));
  }
}

TEST_CASE("F0 saturates the upper half outside X0") {
  auto f = make(4, 5, Rational(1, 8), Rational(1, 4), 3);
  auto load = loads(f.g, build_f0(f.g, f.planted));
  for (Vertex v = 0; v < f.g.graph().num_vertices(); ++v) {
    auto gv = f.g.vertex(v);
    if (f.planted.in_x0[gv.variable]) continue;
    if (2 * std::popcount(gv.subset) >= 5) CHECK(load[v] == f.g.weight(v));
  }
}

TEST_CASE("F1 is empty for two colors") {
  auto f = make(3, 2, Rational(1, 4), 0, 1);
  CHECK(build_f1(f.g, f.planted, Strategy::hamiltonian).support_size() == 0);
  CHECK(build_f1(f.g, f.planted, Strategy::uniform).support_size() == 0);
}

TEST_CASE("F1 layer loads and strategy equivalence") {
  for (std::uint32_t colors : {4u, 5u, 6u}) {
    auto f = make(4, colors, Rational(1, 8), Rational(1, 4), colors);
    auto ham = build_f1(f.g, f.planted, Strategy::hamiltonian);
    auto uni = build_f1(f.g, f.planted, Strategy::uniform);
    CHECK_FALSE(ham == uni);
    auto lh = loads(f.g, ham);
    auto lu = loads(f.g, uni);
    CHECK(lh == lu);
    const auto& mu = f.g.mu_table();
    for (Vertex v = 0; v < f.g.graph().num_vertices(); ++v) {
      auto gv = f.g.vertex(v);
      const bool in_x0 = f.planted.in_x0[gv.variable];
      const ulc::ColorSet rx = ulc::ColorSet{1} << f.planted.labelling[gv.variable];
      if (in_x0 && (gv.subset & rx)) {
        CHECK(lh[v] == 0);
        continue;
      }
      const unsigned m = in_x0 ? colors - 1 : colors;
      const unsigned k = static_cast<unsigned>(std::popcount(gv.subset));
      Rational expected = (k >= 1 && 2 * k < m) ? mu[k] - mu[m - k] : Rational(0);
      CHECK(lh[v] == expected);
    }
    // Capacity of every F1 value.
    for (const auto& [e, x] : ham.values()) CHECK(x <= f.g.edge_weight(e.u, e.v, gadget::EdgeRule::min));
  }
}

TEST_CASE("F2 with X0 empty on a triangle") {
  auto f = make(3, 2, Rational(1, 4), 0, 1);
  ulc::Planted outside{f.planted.labelling, {false, false, false}};
  auto f2 = build_f2(f.g, outside);
  CHECK(f2.support_size() == 3);
  for (const auto& [e, x] : f2.values()) {
    CHECK(x == Rational(1, 12));
    CHECK(f.g.vertex(e.u).subset == 0);
    CHECK(f.g.vertex(e.v).subset == 0);
    CHECK(x <= f.g.edge_weight(e.u, e.v, gadget::EdgeRule::min));
    CHECK(f.g.edge_weight(e.u, e.v, gadget::EdgeRule::min) == Rational(3, 16));
  }
  auto load = loads(f.g, f2);
  for (Vertex x = 0; x < 3; ++x) CHECK(load[f.g.id(x, 0)] == Rational(1, 6));
}

TEST_CASE("F2 on a two-variable class uses one edge") {
  auto inst = ulc::new_instance(2, 2, {{0, 1, {0, 1}}}).with_planted({{0, 0}, {false, false}});
  auto g = gadget::build_gadget(inst, Rational(1, 4), Flavor::extended);
  auto f2 = build_f2(g, *inst.planted());
  CHECK(f2.support_size() == 1);
  CHECK(f2.value(Edge(g.id(0, 0), g.id(1, 0))) == g.mu_table()[0] - g.mu_table()[2]);
  auto report = validate(g, build_full(g, *inst.planted()));
  CHECK(report.valid());
  CHECK(report.unsaturated.empty());
}

TEST_CASE("F2 rejects an unattachable singleton class") {
  // x0 alone in X0, x1 and x2 outside; x0 only touches x1.
  auto inst = ulc::new_instance(3, 2, {{0, 1, {0, 1}}, {1, 2, {0, 1}}}).with_planted({{0, 0, 0}, {true, false, false}});
  auto g = gadget::build_gadget(inst, Rational(1, 4), Flavor::extended);
  try {
    build_f2(g, *inst.planted());
    FAIL("expected rejection");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("need >= 2 variables per class") != std::string::npos);
  }
}

TEST_CASE("singleton class attached as a hub") {
  // |X| = 4, xi = 1/4 leaves exactly one variable outside X0.
  auto f = make(4, 3, Rational(1, 4), Rational(1, 4), 5);
  auto groups = plan_empty_groups(f.g, f.planted);
  REQUIRE(groups.size() == 1);
  REQUIRE(groups[0].hub);
  auto report = validate(f.g, build_full(f.g, f.planted));
  CHECK(report.valid());
  auto is = gadget::independent_set(f.g, f.planted);
  auto in_is = membership(f.g.graph().num_vertices(), is.vertices);
  for (Vertex v = 0; v < f.g.graph().num_vertices(); ++v) {
    CHECK(report.load[v] == (in_is[v] ? Rational(0) : f.g.weight(v)));
  }
}

TEST_CASE("Setup A full matching saturates the complement of IS") {
  auto f = make(3, 2, Rational(1, 4), 0, 1);
  auto fm = build_full(f.g, f.planted);
  auto report = validate(f.g, fm);
  CHECK(report.valid());
  auto is = gadget::independent_set(f.g, f.planted);
  CHECK(report.saturated.size() == 6);
  CHECK(report.unsaturated.size() == 6);
  for (auto& [v, deficit] : report.unsaturated) {
    CHECK(std::binary_search(is.vertices.begin(), is.vertices.end(), v));
    CHECK(deficit == f.g.weight(v));
    CHECK(report.load[v] == 0);
  }
  CHECK(build_full(f.g, f.planted) == fm);
}

TEST_CASE("saturation identities") {
  for (Rational eps : {Rational(1, 4), Rational(1, 8), Rational(1, 3)}) {
    for (std::uint32_t r = 2; r <= 8; ++r) {
      std::vector<Rational> mu;
      for (std::uint32_t s = 0; s <= r; ++s) mu.push_back(gadget::mu(5, r, eps, s));
      for (std::uint32_t k = 1; 2 * k < r; ++k) {
        CHECK(mu[r - k] + 4 * ((mu[k] - mu[r - k]) / 4) == mu[k]);
        CHECK((mu[k] - mu[r - k]) / 4 <= mu[k]);
      }
      CHECK(mu[r] + 2 * ((mu[0] - mu[r]) / 2) == mu[0]);
      CHECK((mu[0] - mu[r]) / 2 <= mu[0]);
    }
  }
}

TEST_CASE("validate reports capacity and budget violations") {
  auto f = make(3, 2, Rational(1, 4), 0, 1);
  FractionalMatching zero;
  auto r0 = validate(f.g, zero);
  CHECK(r0.valid());
  CHECK(r0.saturated.empty());

  const Edge e(f.g.id(0, 0b01), f.g.id(0, 0b10));
  const Rational cap = f.g.edge_weight(e.u, e.v, gadget::EdgeRule::min);
  FractionalMatching at_cap;
  at_cap.add(e, cap);
  CHECK(validate(f.g, at_cap).valid());
  FractionalMatching over;
  over.add(e, cap + Rational(1, 1000000));
  auto r = validate(f.g, over);
  CHECK_FALSE(r.capacity_ok);
  CHECK(r.capacity_violations == std::vector<Edge>{e});
  CHECK_FALSE(r.budget_ok);

  FractionalMatching foreign;
  foreign.add(Edge(f.g.id(0, 0b01), f.g.id(0, 0b11)), Rational(1, 100));
  CHECK_FALSE(validate(f.g, foreign).support_ok);
}

TEST_CASE("fractional matching arithmetic") {
  FractionalMatching a;
  a.add(Edge(0, 1), Rational(1, 3));
  a.add(Edge(1, 0), Rational(1, 6));
  CHECK(a.value(Edge(0, 1)) == Rational(1, 2));
  a.add(Edge(0, 1), Rational(-1, 2));
  CHECK(a.support_size() == 0);
  a.add(Edge(2, 3), 0);
  CHECK(a.support_size() == 0);
}

TEST_CASE("support locality and exact saturation over a sweep") {
  for (std::uint32_t colors = 2; colors <= 6; ++colors) {
    for (std::size_t vars : {3u, 5u, 8u, 12u}) {
      for (Rational xi : {Rational(0), Rational(1, 4)}) {
        for (auto topo : {ulc::Topology::cycle, ulc::Topology::complete}) {
          auto f = make(vars, colors, Rational(1, 8), xi, vars + 17 * colors, topo);
          auto fm = build_full(f.g, f.planted);
          auto report = validate(f.g, fm);
          CHECK(report.valid());
          auto is = gadget::independent_set(f.g, f.planted);
          auto in_is = membership(f.g.graph().num_vertices(), is.vertices);
          auto load = loads(f.g, fm);
          for (Vertex v = 0; v < f.g.graph().num_vertices(); ++v) {
            if (load[v] != (in_is[v] ? Rational(0) : f.g.weight(v))) FAIL("load mismatch at " << v);
          }
          for (const auto& [e, x] : fm.values()) {
            auto a = f.g.vertex(e.u);
            auto b = f.g.vertex(e.v);
            CHECK((a.variable == b.variable || (a.subset == 0 && b.subset == 0)));
          }
        }
      }
    }
  }
}
