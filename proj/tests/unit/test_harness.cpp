#include <fstream>
#include <iterator>

#include "doctest.h"
#include "mmm/harness/experiment.hpp"
#include "mmm/harness/lemmas.hpp"
#include "mmm/harness/serialize.hpp"
#include "mmm/solvers.hpp"

using namespace mmm;
using namespace mmm::harness;

namespace {

ulc::UlcInstance setup_a() {
  return ulc::generate_yes({.num_vars = 3, .num_colors = 2, .xi = 0, .topology = ulc::Topology::cycle, .seed = 1});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Runs f and returns the location of the SchemaError it throws.
template <typename F>
std::string error_location(F&& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.location();
  }
  FAIL("no SchemaError thrown");
  return {};
}

}  // namespace

TEST_CASE("instances round-trip through JSON") {
  for (auto inst : {setup_a(),
                    ulc::generate_yes({.num_vars = 6, .num_colors = 3, .xi = Rational(1, 3),
                                       .topology = ulc::Topology::random, .p_edge = 0.4, .seed = 9}),
                    ulc::new_instance(2, 1, {{0, 1, {0}}})}) {
    const std::string text = dump(to_json(inst));
    const auto back = instance_from_json(parse(text));
    CHECK(back == inst);
    CHECK(back.planted().has_value() == inst.planted().has_value());
    CHECK(dump(to_json(back)) == text);
  }
}

TEST_CASE("graphs, gadgets, blowups and matchings round-trip") {
  auto inst = setup_a();
  auto g = gadget::build_gadget(inst, Rational(1, 4), gadget::Flavor::extended);
  CHECK(gadget_from_json(parse(dump(to_json(g)))) == g);
  CHECK(graph_from_json(parse(dump(to_json(g.graph())))) == g.graph());

  auto b = blowup::blow_up(g, Rational(1, 2));
  const std::string text = dump(to_json(b));
  auto back = blowup_from_json(parse(text));
  CHECK(back == b);
  CHECK(back.graph() == b.graph());
  CHECK(dump(to_json(back)) == text);

  auto m = gadget::yes_matching(g, *inst.planted());
  CHECK(matching_from_json(parse(dump(to_json(m)))) == m);

  auto bg = bipartite::planted_biclique_graph(5, 2, 0.4, 3);
  auto bg_back = bipartite_from_json(parse(dump(to_json(bg))));
  CHECK(bg_back.left_size() == 5);
  CHECK(bg_back.graph() == bg.graph());

  auto fm = fracmatch::build_full(g, *inst.planted());
  CHECK(fractional_from_json(parse(dump(to_json(fm)))) == fm);
}

TEST_CASE("fractional value 1/12 is stored as the string \"1/12\"") {
  fracmatch::FractionalMatching fm;
  fm.add(Edge(0, 1), Rational(1, 12));
  const Json doc = to_json(fm);
  CHECK(doc["values"][0]["value"] == "1/12");
  auto back = fractional_from_json(parse(dump(doc)));
  CHECK(back.value(Edge(0, 1)) == Rational(1, 12));
  CHECK(back == fm);
}

TEST_CASE("DOT of the 4-vertex gadget matches the golden file") {
  auto inst = ulc::new_instance(2, 1, {{0, 1, {0}}});
  auto g = gadget::build_gadget(inst, Rational(1, 4), gadget::Flavor::base);
  REQUIRE(g.graph().num_vertices() == 4);
  CHECK(to_dot(g) == read_file(std::string(MMM_TEST_DATA_DIR) + "/gadget_4.dot"));
}

TEST_CASE("blowup DOT names copies as <(x,S),i>") {
  auto g = gadget::build_gadget(setup_a(), Rational(1, 4), gadget::Flavor::extended);
  auto b = blowup::blow_up(g, Rational(2));
  const std::string dot = to_dot(b);
  const Vertex c = b.num_vertices() - 1;
  const auto gv = g.vertex(b.base_of(c));
  const std::string label = "⟨(" + std::to_string(gv.variable) + "," + color_set_label(gv.subset) + ")," +
                            std::to_string(b.index_of(c)) + "⟩";
  CHECK(dot.find("  " + std::to_string(c) + " [label=\"" + label + "\"];\n") != std::string::npos);
  CHECK(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '\n')) ==
        b.num_vertices() + b.graph().num_edges() + 2);
}

TEST_CASE("color set labels") {
  CHECK(color_set_label(0) == "{}");
  CHECK(color_set_label(0b1) == "{0}");
  CHECK(color_set_label(0b101) == "{0,2}");
}

TEST_CASE("schema violations name the offending field") {
  Json inst = to_json(setup_a());
  SUBCASE("wrong schema") {
    inst["schema"] = "other/9";
    CHECK(error_location([&] { instance_from_json(inst); }) == "/schema");
  }
  SUBCASE("wrong kind") {
    CHECK(error_location([&] { graph_from_json(inst); }) == "/kind");
  }
  SUBCASE("missing field") {
    inst.erase("num_vars");
    CHECK(error_location([&] { instance_from_json(inst); }) == "/num_vars");
  }
  SUBCASE("bad permutation entry") {
    inst["constraints"][1]["perm"][0] = "zero";
    CHECK(error_location([&] { instance_from_json(inst); }) == "/constraints/1/perm/0");
  }
  SUBCASE("non-bijective permutation") {
    inst["constraints"][0]["perm"] = {0, 0};
    CHECK(error_location([&] { instance_from_json(inst); }) == "/constraints");
  }
  SUBCASE("labelling color out of range") {
    inst["planted"]["labelling"][2] = 7;
    CHECK(error_location([&] { instance_from_json(inst); }) == "/planted/labelling/2");
  }
  SUBCASE("syntax error") {
    CHECK(error_location([] { parse("{\"schema\": "); }) == "/");
  }

  auto g = gadget::build_gadget(setup_a(), Rational(1, 4), gadget::Flavor::extended);
  Json gd = to_json(g);
  SUBCASE("tampered weight") {
    gd["vertices"][3]["weight"] = "1/2";
    CHECK(error_location([&] { gadget_from_json(gd); }) == "/vertices/3/weight");
  }
  SUBCASE("malformed rational") {
    gd["epsilon"] = "1/0";
    CHECK(error_location([&] { gadget_from_json(gd); }) == "/epsilon");
  }
  SUBCASE("edge out of range") {
    gd["edges"].push_back({0, 99});
    CHECK(error_location([&] { gadget_from_json(gd); }) == "/edges");
  }
  SUBCASE("tampered blowup units") {
    Json bd = to_json(blowup::blow_up(g, Rational(1, 2)));
    bd["units"][0] = 1000;
    CHECK(error_location([&] { blowup_from_json(bd); }) == "/units/0");
  }
  SUBCASE("negative fractional value") {
    Json fd = {{"schema", kSchema}, {"kind", "fractional_matching"},
               {"values", {{{"u", 0}, {"v", 1}, {"value", "-1/3"}}}}};
    CHECK(error_location([&] { fractional_from_json(fd); }) == "/values/0/value");
  }
}

TEST_CASE("verify_lemma on Setup A") {
  LemmaParams p;  // Setup A

  SUBCASE("fra-mat saturates exactly V minus IS") {
    auto r = verify_lemma("fra-mat", p);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.mode == Mode::constructive);
    CHECK(r.lhs == 6);  // 12 vertices, |IS| = 6
    CHECK(r.rhs == 6);
  }
  SUBCASE("wei-yes gives w+(M) = 3/4 <= 1/2 + 2eps") {
    auto r = verify_lemma("wei-yes", p);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.lhs == Rational(3, 4));
    CHECK(r.rhs == Rational(1));
    CHECK(r.slack == Rational(1, 4));
  }
  SUBCASE("kr07-yes gives w(IS) = 1/4 >= 1/2 - 2eps = 0") {
    auto r = verify_lemma("kr07-yes", p);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.lhs == Rational(1, 4));
    CHECK(r.rhs == 0);
    CHECK(r.slack == Rational(1, 4));
  }
  SUBCASE("card-completeness at rho = 1/2") {
    auto r = verify_lemma("card-completeness", p);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.lhs < r.rhs);
  }
  SUBCASE("NO-side lemmas are labelled surrogate") {
    for (const char* id : {"wei-no", "card-soundness", "bip-sseh-no"}) {
      p.rho = 2;
      auto r = verify_lemma(id, p);
      CHECK(r.mode == Mode::surrogate);
      CHECK_MESSAGE(r.verdict == Verdict::pass, id, ": ", r.detail);
    }
  }
  SUBCASE("remaining constructive lemmas pass") {
    for (const char* id : {"bip-cover", "bip-sseh-yes", "total-vc"}) {
      auto r = verify_lemma(id, p);
      CHECK_MESSAGE(r.verdict == Verdict::pass, id, ": ", r.detail);
    }
  }
  SUBCASE("oversized surrogate reports budget, not fail") {
    auto r = verify_lemma("card-soundness", p);  // 120 copies
    CHECK(r.verdict == Verdict::budget);
  }
  SUBCASE("unknown id") {
    CHECK_THROWS_AS(verify_lemma("no-such-lemma", p), InvalidArgument);
  }
  SUBCASE("non-integral SSEH sizes are rejected") {
    p.sseh_n = 6;  // (1/2 - 1/4) 6 = 3/2
    CHECK_THROWS_AS(verify_lemma("bip-sseh-yes", p), InvalidArgument);
  }
}

TEST_CASE("wei-yes without the xi bound checks the identity") {
  LemmaParams p;
  p.num_vars = 4;
  p.xi = Rational(1, 4);  // xi > eps/2
  auto r = verify_lemma("wei-yes", p);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.relation == "w+(M) + w(IS) = 1");
  CHECK(r.lhs == 1);
}

TEST_CASE("lemma reports are deterministic") {
  LemmaParams p;
  p.rho = 2;
  for (const auto& id : lemma_ids()) {
    auto a = dump(to_json(verify_lemma(id, p)));
    auto b = dump(to_json(verify_lemma(id, p)));
    CHECK(a == b);
  }
}

TEST_CASE("experiment tables") {
  SUBCASE("1-point grid with fra-mat gives one passing row") {
    ExperimentConfig c;
    c.lemmas = {"fra-mat"};
    auto result = run_experiment(c);
    REQUIRE(result.rows.size() == 1);
    CHECK(result.rows[0].verdict == Verdict::pass);
    CHECK_FALSE(result.any_fail());
  }
  SUBCASE("|R| in {2,3,4} x |X| in {3,6} gives six passing rows") {
    ExperimentConfig c;
    c.grid.num_colors = {2, 3, 4};
    c.grid.num_vars = {3, 6};
    c.lemmas = {"fra-mat"};
    auto result = run_experiment(c);
    REQUIRE(result.rows.size() == 6);
    for (const auto& r : result.rows) CHECK(r.verdict == Verdict::pass);
    // num_vars varies slowest
    CHECK(result.rows[0].params.num_vars == 3);
    CHECK(result.rows[0].params.num_colors == 2);
    CHECK(result.rows[1].params.num_colors == 3);
    CHECK(result.rows[3].params.num_vars == 6);
  }
  SUBCASE("empty lemma selection gives a header-only table") {
    ExperimentConfig c;
    auto result = run_experiment(c);
    CHECK(result.rows.empty());
    CHECK_FALSE(result.any_fail());
    const std::string csv = to_csv(result);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1);
  }
  SUBCASE("threads do not change the table") {
    ExperimentConfig c;
    c.grid.num_colors = {2, 3};
    c.grid.seed = {1, 2, 3};
    c.lemmas = {"fra-mat", "wei-yes", "kr07-yes"};
    const std::string serial = to_csv(run_experiment(c));
    c.threads = 3;
    CHECK(to_csv(run_experiment(c)) == serial);
    CHECK(std::count(serial.begin(), serial.end(), '\n') == 1 + 18);
  }
}

TEST_CASE("CSV quoting") {
  ExperimentResult result;
  LemmaReport r;
  r.id = "x";
  r.relation = "a, b";
  r.detail = "say \"hi\"";
  result.rows.push_back(r);
  const std::string csv = to_csv(result);
  CHECK(csv.find(",\"a, b\",") != std::string::npos);
  CHECK(csv.find(",\"say \"\"hi\"\"\"\n") != std::string::npos);
}

TEST_CASE("experiment configs parse and report locations") {
  ExperimentConfig c;
  c.grid.epsilon = {Rational(1, 4), Rational(1, 8)};
  c.grid.topology = {ulc::Topology::complete};
  c.lemmas = {"wei-yes", "fra-mat"};
  c.threads = 2;
  c.base.samples = 17;
  const std::string text = dump(to_json(c));
  auto back = config_from_json(parse(text));
  CHECK(dump(to_json(back)) == text);
  CHECK(back.grid.epsilon == c.grid.epsilon);
  CHECK(back.base.samples == 17);

  Json doc = parse(text);
  doc["grid"]["epsilon"][1] = 0.125;
  CHECK(error_location([&] { config_from_json(doc); }) == "/grid/epsilon/1");
  doc = parse(text);
  doc["lemmas"][0] = "bogus";
  CHECK(error_location([&] { config_from_json(doc); }) == "/lemmas/0");
  doc = parse(text);
  doc["grid"]["topology"][0] = "torus";
  CHECK(error_location([&] { config_from_json(doc); }) == "/grid/topology/0");
  doc = parse(text);
  doc["grid"]["seed"] = Json::array();
  CHECK(error_location([&] { config_from_json(doc); }) == "/grid/seed");
}
