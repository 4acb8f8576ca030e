#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "mmm/harness/experiment.hpp"
#include "mmm/harness/lemmas.hpp"
#include "mmm/harness/serialize.hpp"
#include "mmm/solvers.hpp"

namespace {

using namespace mmm;
using namespace mmm::harness;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  std::uint64_t seed = 1;
  std::uint64_t budget = 50'000'000;
  std::string format = "json";
  std::string output = "-";
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open \"" + path + "\"");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const Globals& g, const std::string& text) {
  if (g.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write \"" + g.output + "\"");
}

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (g.format == f) return;
  }
  throw InvalidArgument("--format " + g.format + " is not supported by this subcommand");
}

ulc::UlcInstance load_instance(const std::string& path) { return instance_from_json(parse(read_text(path))); }

const ulc::Planted& planted_of(const ulc::UlcInstance& instance) {
  if (!instance.planted()) throw InvalidArgument("instance carries no planted labelling");
  return *instance.planted();
}

// Any document that carries a graph: graph, bipartite_graph, gadget or blowup.
Graph load_graph(const Json& document) {
  const std::string kind = kind_of(document);
  if (kind == "graph") return graph_from_json(document);
  if (kind == "bipartite_graph") return bipartite_from_json(document).graph();
  if (kind == "gadget") return gadget_from_json(document).graph();
  if (kind == "blowup") return blowup_from_json(document).graph();
  throw SchemaError("/kind", "expected a graph-carrying document, got \"" + kind + "\"");
}

Rational rational_option(const std::string& text) { return parse_rational(text); }

std::string status_name(solvers::Status s) { return s == solvers::Status::optimal ? "optimal" : "limit_reached"; }

Json solver_document(const std::string& problem, solvers::Status status, const std::string& objective,
                     std::uint64_t nodes) {
  Json out;
  out["schema"] = kSchema;
  out["kind"] = "solver_result";
  out["problem"] = problem;
  out["status"] = status_name(status);
  out["objective"] = objective;
  out["nodes"] = nodes;
  return out;
}

int emit_report(const Globals& g, const LemmaReport& report) {
  require_format(g, {"json", "csv"});
  if (g.format == "csv") {
    write_text(g, to_csv({.rows = {report}}));
  } else {
    write_text(g, dump(to_json(report)));
  }
  std::cerr << report.id << ": " << to_string(report.verdict) << (report.detail.empty() ? "" : " (" + report.detail + ")")
            << "\n";
  switch (report.verdict) {
    case Verdict::pass: return kPass;
    case Verdict::fail: return kFail;
    case Verdict::budget: return kUsage;
  }
  return kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gadget constructions and lemma checks for minimum maximal matching"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Generator seed")->capture_default_str();
  app.add_option("--budget", g.budget, "Exact-solver node limit")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "csv"}))
      ->capture_default_str();
  app.add_option("-o,--output", g.output, "Output file, - for stdout")->capture_default_str();

  // gen-ulc
  auto* gen = app.add_subcommand("gen-ulc", "Generate a YES instance of unique label cover");
  std::size_t vars = 3;
  std::uint32_t colors = 2;
  std::string xi = "0";
  std::string topology = "cycle";
  double p_edge = 0.5;
  gen->add_option("--vars", vars, "Number of variables")->capture_default_str();
  gen->add_option("--colors", colors, "Number of colors |R|")->capture_default_str();
  gen->add_option("--xi", xi, "Fraction of variables left out of X0")->capture_default_str();
  gen->add_option("--topology", topology, "cycle, complete or random")->capture_default_str();
  gen->add_option("--p-edge", p_edge, "Extra edge probability for random topology")->capture_default_str();

  // build-gadget, fracmatch, blowup take an instance file
  std::string input;
  std::string epsilon = "1/4";
  std::string flavor = "extended";
  auto* build = app.add_subcommand("build-gadget", "Build the weighted gadget graph of an instance");
  build->add_option("instance", input, "Instance JSON")->required();
  build->add_option("--epsilon", epsilon, "Gadget epsilon")->capture_default_str();
  build->add_option("--flavor", flavor, "base or extended")
      ->check(CLI::IsMember({"base", "extended"}))
      ->capture_default_str();

  std::string strategy = "hamiltonian";
  auto* frac = app.add_subcommand("fracmatch", "Build the full fractional matching on the extended gadget");
  frac->add_option("instance", input, "Instance JSON")->required();
  frac->add_option("--epsilon", epsilon, "Gadget epsilon")->capture_default_str();
  frac->add_option("--strategy", strategy, "hamiltonian or uniform")->capture_default_str();

  std::string rho = "1/2";
  auto* blow = app.add_subcommand("blowup", "Blow up the extended gadget into an unweighted graph");
  blow->add_option("instance", input, "Instance JSON")->required();
  blow->add_option("--epsilon", epsilon, "Gadget epsilon")->capture_default_str();
  blow->add_option("--rho", rho, "Blowup granularity")->capture_default_str();

  auto* bip = app.add_subcommand("bipartise", "Bipartisation of a graph-carrying document");
  bip->add_option("graph", input, "Graph, gadget or blowup JSON")->required();

  std::size_t sseh_n = 4;
  std::size_t sseh_k = 1;
  double sseh_p = 0.3;
  auto* sseh = app.add_subcommand("sseh", "SSEH biclique gadget of a bipartite graph");
  sseh->add_option("graph", input, "Bipartite graph JSON; omitted means a planted-biclique graph");
  sseh->add_option("--epsilon", epsilon, "Gadget epsilon")->capture_default_str();
  sseh->add_option("--n", sseh_n, "Side size of the generated graph")->capture_default_str();
  sseh->add_option("--k", sseh_k, "Planted biclique side")->capture_default_str();
  sseh->add_option("--p", sseh_p, "Background edge probability")->capture_default_str();

  std::string problem;
  auto* solve = app.add_subcommand("solve", "Exact solvers");
  solve->add_option("problem", problem, "mmm, vc or mbb")->required()->check(CLI::IsMember({"mmm", "vc", "mbb"}));
  solve->add_option("graph", input, "Graph-carrying JSON (bipartite for mbb)")->required();

  std::string lemma;
  LemmaParams params;
  std::string lemma_epsilon = "1/4";
  std::string lemma_xi = "0";
  std::string lemma_rho = "1/2";
  auto* verify = app.add_subcommand("verify-lemma", "Run one lemma pipeline with exact checks");
  verify->add_option("id", lemma, "Lemma id")->required()->check(CLI::IsMember(lemma_ids()));
  verify->add_option("--vars", params.num_vars, "Number of variables")->capture_default_str();
  verify->add_option("--colors", params.num_colors, "Number of colors |R|")->capture_default_str();
  verify->add_option("--epsilon", lemma_epsilon, "Gadget epsilon")->capture_default_str();
  verify->add_option("--xi", lemma_xi, "Fraction of variables left out of X0")->capture_default_str();
  verify->add_option("--rho", lemma_rho, "Blowup granularity")->capture_default_str();
  verify->add_option("--topology", topology, "cycle, complete or random")->capture_default_str();
  verify->add_option("--p-edge", params.p_edge, "Edge probability")->capture_default_str();
  verify->add_option("--sseh-n", params.sseh_n, "Side size for the SSEH lemmas")->capture_default_str();
  verify->add_option("--strategy", strategy, "hamiltonian or uniform")->capture_default_str();
  verify->add_option("--samples", params.samples, "Random maximal matchings where sampled")->capture_default_str();
  verify->add_option("--enumeration-limit", params.enumeration_limit, "Enumeration cap")->capture_default_str();

  std::string config_path;
  auto* experiment = app.add_subcommand("experiment", "Run a grid of lemma checks into a CSV table");
  experiment->add_option("config", config_path, "Experiment config JSON")->required();

  auto* exporter = app.add_subcommand("export", "Re-encode a document as JSON or DOT");
  exporter->add_option("document", input, "Any JSON document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*gen) {
      require_format(g, {"json"});
      auto instance = ulc::generate_yes({.num_vars = vars,
                                         .num_colors = colors,
                                         .xi = rational_option(xi),
                                         .topology = parse_topology(topology),
                                         .p_edge = p_edge,
                                         .seed = g.seed});
      write_text(g, dump(to_json(instance)));
    } else if (*build) {
      auto instance = load_instance(input);
      auto gadget = gadget::build_gadget(instance, rational_option(epsilon),
                                         flavor == "base" ? gadget::Flavor::base : gadget::Flavor::extended);
      require_format(g, {"json", "dot"});
      write_text(g, g.format == "dot" ? to_dot(gadget) : dump(to_json(gadget)));
    } else if (*frac) {
      require_format(g, {"json"});
      auto instance = load_instance(input);
      auto gadget = gadget::build_gadget(instance, rational_option(epsilon), gadget::Flavor::extended);
      auto fm = fracmatch::build_full(gadget, planted_of(instance), parse_strategy(strategy));
      auto report = fracmatch::validate(gadget, fm);
      Json out = to_json(fm);
      out["saturation"] = to_json(report);
      write_text(g, dump(out));
      return report.capacity_ok && report.budget_ok && report.support_ok ? kPass : kFail;
    } else if (*blow) {
      auto instance = load_instance(input);
      auto gadget = gadget::build_gadget(instance, rational_option(epsilon), gadget::Flavor::extended);
      auto b = blowup::blow_up(gadget, rational_option(rho));
      require_format(g, {"json", "dot"});
      write_text(g, g.format == "dot" ? to_dot(b) : dump(to_json(b)));
    } else if (*bip) {
      auto base = load_graph(parse(read_text(input)));
      auto h = bipartite::bipartise(base);
      require_format(g, {"json", "dot"});
      write_text(g, g.format == "dot" ? to_dot(h.graph()) : dump(to_json(h.graph())));
    } else if (*sseh) {
      auto graph = input.empty() ? bipartite::planted_biclique_graph(sseh_n, sseh_k, sseh_p, g.seed)
                                 : bipartite_from_json(parse(read_text(input)));
      auto gadget = bipartite::sseh_gadget(graph, rational_option(epsilon));
      require_format(g, {"json", "dot"});
      write_text(g, g.format == "dot" ? to_dot(gadget.graph().graph()) : dump(to_json(gadget.graph())));
    } else if (*solve) {
      require_format(g, {"json"});
      const Json document = parse(read_text(input));
      const solvers::SolverOptions options{.node_limit = g.budget};
      Json out;
      solvers::Status status;
      if (problem == "mbb") {
        auto result = solvers::exact_mbb(bipartite_from_json(document), {.node_limit = g.budget, .max_vertices = 20});
        status = result.status;
        out = solver_document(problem, status, std::to_string(result.objective), result.nodes);
        out["left"] = result.left;
        out["right"] = result.right;
      } else if (problem == "mmm") {
        auto result = solvers::exact_mmm(load_graph(document), {}, options);
        status = result.status;
        out = solver_document(problem, status, to_string(result.objective), result.nodes);
        out["witness"] = to_json(result.witness);
      } else {
        auto result = solvers::exact_min_vertex_cover(load_graph(document), {}, options);
        status = result.status;
        out = solver_document(problem, status, to_string(result.objective), result.nodes);
        out["witness"] = result.witness;
      }
      write_text(g, dump(out));
      return status == solvers::Status::optimal ? kPass : kUsage;
    } else if (*verify) {
      params.epsilon = rational_option(lemma_epsilon);
      params.xi = rational_option(lemma_xi);
      params.rho = rational_option(lemma_rho);
      params.topology = parse_topology(topology);
      params.strategy = parse_strategy(strategy);
      params.seed = g.seed;
      params.node_limit = g.budget;
      return emit_report(g, verify_lemma(lemma, params));
    } else if (*experiment) {
      require_format(g, {"json", "csv"});
      auto config = config_from_json(parse(read_text(config_path)));
      auto result = run_experiment(config);
      if (g.output == "-" && !config.output.empty()) g.output = config.output;
      write_text(g, to_csv(result));
      std::size_t passed = 0;
      for (const auto& row : result.rows) passed += row.verdict == Verdict::pass;
      std::cerr << passed << "/" << result.rows.size() << " rows pass\n";
      if (result.any_fail()) return kFail;
      return result.any_budget() ? kUsage : kPass;
    } else if (*exporter) {
      const Json document = parse(read_text(input));
      require_format(g, {"json", "dot"});
      if (g.format == "json") {
        write_text(g, dump(document));
        return kPass;
      }
      const std::string kind = kind_of(document);
      if (kind == "gadget") {
        write_text(g, to_dot(gadget_from_json(document)));
      } else if (kind == "blowup") {
        write_text(g, to_dot(blowup_from_json(document)));
      } else {
        write_text(g, to_dot(load_graph(document)));
      }
    }
    return kPass;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
