#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mmm/harness/experiment.hpp"
#include "mmm/harness/lemmas.hpp"
#include "mmm/harness/serialize.hpp"
#include "mmm/solvers.hpp"

namespace py = pybind11;
using namespace mmm;
using namespace mmm::harness;

namespace {

// Entities cross the boundary as JSON documents in the persisted schema.
std::string generate_ulc(std::size_t num_vars, std::uint32_t num_colors, const std::string& xi,
                         const std::string& topology, double p_edge, std::uint64_t seed) {
  return dump(to_json(ulc::generate_yes({.num_vars = num_vars,
                                         .num_colors = num_colors,
                                         .xi = parse_rational(xi),
                                         .topology = parse_topology(topology),
                                         .p_edge = p_edge,
                                         .seed = seed})));
}

gadget::GadgetGraph gadget_of(const std::string& instance, const std::string& epsilon, const std::string& flavor) {
  if (flavor != "base" && flavor != "extended") throw InvalidArgument("flavor must be \"base\" or \"extended\"");
  return gadget::build_gadget(instance_from_json(parse(instance)), parse_rational(epsilon),
                              flavor == "base" ? gadget::Flavor::base : gadget::Flavor::extended);
}

std::string fractional_matching(const std::string& instance, const std::string& epsilon, const std::string& strategy) {
  auto inst = instance_from_json(parse(instance));
  if (!inst.planted()) throw InvalidArgument("instance carries no planted labelling");
  auto g = gadget::build_gadget(inst, parse_rational(epsilon), gadget::Flavor::extended);
  auto fm = fracmatch::build_full(g, *inst.planted(), parse_strategy(strategy));
  Json out = to_json(fm);
  out["saturation"] = to_json(fracmatch::validate(g, fm));
  return dump(out);
}

std::string blow_up(const std::string& instance, const std::string& epsilon, const std::string& rho) {
  return dump(to_json(blowup::blow_up(gadget_of(instance, epsilon, "extended"), parse_rational(rho))));
}

Graph graph_of(const Json& document) {
  const std::string kind = kind_of(document);
  if (kind == "graph") return graph_from_json(document);
  if (kind == "bipartite_graph") return bipartite_from_json(document).graph();
  if (kind == "gadget") return gadget_from_json(document).graph();
  if (kind == "blowup") return blowup_from_json(document).graph();
  throw SchemaError("/kind", "expected a graph-carrying document, got \"" + kind + "\"");
}

std::string export_dot(const std::string& document) {
  const Json doc = parse(document);
  const std::string kind = kind_of(doc);
  if (kind == "gadget") return to_dot(gadget_from_json(doc));
  if (kind == "blowup") return to_dot(blowup_from_json(doc));
  return to_dot(graph_of(doc));
}

py::dict solve(const std::string& problem, const std::string& document, std::uint64_t node_limit) {
  const Json doc = parse(document);
  py::dict out;
  const solvers::SolverOptions options{.node_limit = node_limit};
  solvers::Status status;
  if (problem == "mmm") {
    auto r = solvers::exact_mmm(graph_of(doc), {}, options);
    status = r.status;
    out["objective"] = to_string(r.objective);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Edge& e : r.witness) edges.emplace_back(e.u, e.v);
    out["witness"] = edges;
  } else if (problem == "vc") {
    auto r = solvers::exact_min_vertex_cover(graph_of(doc), {}, options);
    status = r.status;
    out["objective"] = to_string(r.objective);
    out["witness"] = r.witness;
  } else if (problem == "mbb") {
    auto r = solvers::exact_mbb(bipartite_from_json(doc), {.node_limit = node_limit, .max_vertices = 20});
    status = r.status;
    out["objective"] = std::to_string(r.objective);
    out["witness"] = py::make_tuple(r.left, r.right);
  } else {
    throw InvalidArgument("problem must be mmm, vc or mbb");
  }
  out["status"] = status == solvers::Status::optimal ? "optimal" : "limit_reached";
  return out;
}

std::string verify(const std::string& id, std::size_t num_vars, std::uint32_t num_colors, const std::string& epsilon,
                   const std::string& xi, const std::string& rho, std::uint64_t seed, const std::string& topology,
                   std::size_t sseh_n, const std::string& strategy, std::uint64_t node_limit, std::size_t samples) {
  LemmaParams p;
  p.num_vars = num_vars;
  p.num_colors = num_colors;
  p.epsilon = parse_rational(epsilon);
  p.xi = parse_rational(xi);
  p.rho = parse_rational(rho);
  p.seed = seed;
  p.topology = parse_topology(topology);
  p.sseh_n = sseh_n;
  p.strategy = parse_strategy(strategy);
  p.node_limit = node_limit;
  p.samples = samples;
  LemmaReport report;
  {
    py::gil_scoped_release release;
    report = verify_lemma(id, p);
  }
  return dump(to_json(report));
}

std::string experiment(const std::string& config) {
  auto c = config_from_json(parse(config));
  py::gil_scoped_release release;
  return to_csv(run_experiment(c));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gadget constructions and lemma checks for minimum maximal matching";

  static py::exception<BudgetExceeded> budget_error(m, "BudgetExceeded", PyExc_RuntimeError);
  static py::exception<InternalError> internal_error(m, "InternalError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceeded& e) {
      py::set_error(budget_error, e.what());
    } catch (const InternalError& e) {
      py::set_error(internal_error, e.what());
    } catch (const InvalidArgument& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.attr("SCHEMA") = kSchema;
  m.def("lemma_ids", &lemma_ids);
  m.def("generate_ulc", &generate_ulc, py::arg("num_vars") = 3, py::arg("num_colors") = 2, py::arg("xi") = "0",
        py::arg("topology") = "cycle", py::arg("p_edge") = 0.5, py::arg("seed") = 1);
  m.def(
      "build_gadget",
      [](const std::string& instance, const std::string& epsilon, const std::string& flavor) {
        return dump(to_json(gadget_of(instance, epsilon, flavor)));
      },
      py::arg("instance"), py::arg("epsilon") = "1/4", py::arg("flavor") = "extended");
  m.def("fractional_matching", &fractional_matching, py::arg("instance"), py::arg("epsilon") = "1/4",
        py::arg("strategy") = "hamiltonian");
  m.def("blowup", &blow_up, py::arg("instance"), py::arg("epsilon") = "1/4", py::arg("rho") = "1/2");
  m.def("to_dot", &export_dot, py::arg("document"));
  m.def("solve", &solve, py::arg("problem"), py::arg("document"), py::arg("node_limit") = 50'000'000);
  m.def("verify_lemma", &verify, py::arg("id"), py::arg("num_vars") = 3, py::arg("num_colors") = 2,
        py::arg("epsilon") = "1/4", py::arg("xi") = "0", py::arg("rho") = "1/2", py::arg("seed") = 1,
        py::arg("topology") = "cycle", py::arg("sseh_n") = 4, py::arg("strategy") = "hamiltonian",
        py::arg("node_limit") = 50'000'000, py::arg("samples") = 200);
  m.def("run_experiment", &experiment, py::arg("config"));
}
