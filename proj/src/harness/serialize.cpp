#include "mmm/harness/serialize.hpp"

#include <bit>
#include <sstream>

namespace mmm::harness {

namespace {

// Field access with pointer-style locations for error messages.
const Json& field(const Json& object, const std::string& key, const std::string& where) {
  if (!object.is_object()) throw SchemaError(where, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) throw SchemaError(where + "/" + key, "missing field");
  return *it;
}

template <typename T>
T as(const Json& value, const std::string& where) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(where, std::string("wrong type (") + e.what() + ")");
  }
}

std::uint64_t as_index(const Json& value, const std::string& where) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    throw SchemaError(where, "expected a nonnegative integer");
  }
  return value.get<std::uint64_t>();
}

Rational as_rational(const Json& value, const std::string& where) {
  if (!value.is_string()) throw SchemaError(where, "expected a \"num/den\" string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw SchemaError(where, e.what());
  }
}

const Json& array_field(const Json& object, const std::string& key, const std::string& where) {
  const Json& value = field(object, key, where);
  if (!value.is_array()) throw SchemaError(where + "/" + key, "expected an array");
  return value;
}

Json header(const char* kind) {
  Json out;
  out["schema"] = kSchema;
  out["kind"] = kind;
  return out;
}

void expect_kind(const Json& document, const std::string& kind) {
  const std::string actual = kind_of(document);
  if (actual != kind) throw SchemaError("/kind", "expected \"" + kind + "\", got \"" + actual + "\"");
}

Json edge_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from(const Json& array, const std::string& where) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < array.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!array[i].is_array() || array[i].size() != 2) throw SchemaError(at, "expected a [u, v] pair");
    out.emplace_back(static_cast<Vertex>(as_index(array[i][0], at + "/0")),
                     static_cast<Vertex>(as_index(array[i][1], at + "/1")));
  }
  return out;
}

Json color_list(ulc::ColorSet set) {
  Json out = Json::array();
  for (ulc::Color r = 0; set >> r; ++r) {
    if (set >> r & 1) out.push_back(r);
  }
  return out;
}

template <typename F>
auto wrap(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw SchemaError(where, e.what());
  }
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string dump(const Json& document) { return document.dump(2) + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("/", std::string("invalid JSON: ") + e.what());
  }
}

std::string kind_of(const Json& document) {
  const std::string schema = as<std::string>(field(document, "schema", ""), "/schema");
  if (schema != kSchema) throw SchemaError("/schema", "unsupported schema \"" + schema + "\"");
  return as<std::string>(field(document, "kind", ""), "/kind");
}

std::string color_set_label(ulc::ColorSet set) {
  std::string out = "{";
  bool first = true;
  for (ulc::Color r = 0; set >> r; ++r) {
    if (!(set >> r & 1)) continue;
    if (!first) out += ",";
    out += std::to_string(r);
    first = false;
  }
  return out + "}";
}

// --- ULC instances ---------------------------------------------------------

Json to_json(const ulc::UlcInstance& instance) {
  Json out = header("ulc_instance");
  out["num_vars"] = instance.num_vars();
  out["num_colors"] = instance.num_colors();
  Json constraints = Json::array();
  for (const auto& c : instance.constraints()) {
    constraints.push_back({{"first", c.first}, {"second", c.second}, {"perm", c.perm}});
  }
  out["constraints"] = std::move(constraints);
  if (const auto& planted = instance.planted()) {
    out["planted"] = {{"labelling", planted->labelling}, {"x0", planted->x0()}};
  } else {
    out["planted"] = nullptr;
  }
  return out;
}

ulc::UlcInstance instance_from_json(const Json& document) {
  expect_kind(document, "ulc_instance");
  const std::size_t n = as_index(field(document, "num_vars", ""), "/num_vars");
  const auto colors = static_cast<std::uint32_t>(as_index(field(document, "num_colors", ""), "/num_colors"));
  const Json& list = array_field(document, "constraints", "");
  std::vector<ulc::Constraint> constraints;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = "/constraints/" + std::to_string(i);
    ulc::Constraint c;
    c.first = static_cast<Vertex>(as_index(field(list[i], "first", at), at + "/first"));
    c.second = static_cast<Vertex>(as_index(field(list[i], "second", at), at + "/second"));
    const Json& perm = array_field(list[i], "perm", at);
    for (std::size_t r = 0; r < perm.size(); ++r) {
      c.perm.push_back(static_cast<ulc::Color>(as_index(perm[r], at + "/perm/" + std::to_string(r))));
    }
    constraints.push_back(std::move(c));
  }
  auto instance = wrap("/constraints", [&] { return ulc::new_instance(n, colors, std::move(constraints)); });
  const Json& planted = field(document, "planted", "");
  if (planted.is_null()) return instance;
  ulc::Planted p;
  const Json& labels = array_field(planted, "labelling", "/planted");
  if (labels.size() != n) throw SchemaError("/planted/labelling", "expected one color per variable");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto c = as_index(labels[i], "/planted/labelling/" + std::to_string(i));
    if (c >= colors) throw SchemaError("/planted/labelling/" + std::to_string(i), "color out of range");
    p.labelling.push_back(static_cast<ulc::Color>(c));
  }
  p.in_x0.assign(n, false);
  const Json& x0 = array_field(planted, "x0", "/planted");
  for (std::size_t i = 0; i < x0.size(); ++i) {
    const auto v = as_index(x0[i], "/planted/x0/" + std::to_string(i));
    if (v >= n) throw SchemaError("/planted/x0/" + std::to_string(i), "variable out of range");
    p.in_x0[v] = true;
  }
  return wrap("/planted", [&] { return instance.with_planted(std::move(p)); });
}

// --- graphs ------------------------------------------------------------------

Json to_json(const Graph& graph) {
  Json out = header("graph");
  out["num_vertices"] = graph.num_vertices();
  out["edges"] = edge_list(graph.edges());
  return out;
}

Graph graph_from_json(const Json& document) {
  expect_kind(document, "graph");
  const std::size_t n = as_index(field(document, "num_vertices", ""), "/num_vertices");
  auto edges = edges_from(array_field(document, "edges", ""), "/edges");
  return wrap("/edges", [&] { return Graph(n, std::move(edges)); });
}

Json to_json(const BipartiteGraph& graph) {
  Json out = header("bipartite_graph");
  out["left_size"] = graph.left_size();
  out["right_size"] = graph.right_size();
  Json edges = Json::array();
  for (const Edge& e : graph.graph().edges()) edges.push_back({e.u, e.v - graph.left_size()});
  out["edges"] = std::move(edges);
  return out;
}

BipartiteGraph bipartite_from_json(const Json& document) {
  expect_kind(document, "bipartite_graph");
  const std::size_t left = as_index(field(document, "left_size", ""), "/left_size");
  const std::size_t right = as_index(field(document, "right_size", ""), "/right_size");
  const Json& list = array_field(document, "edges", "");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = "/edges/" + std::to_string(i);
    if (!list[i].is_array() || list[i].size() != 2) throw SchemaError(at, "expected a [left, right] pair");
    edges.emplace_back(as_index(list[i][0], at + "/0"), as_index(list[i][1], at + "/1"));
  }
  return wrap("/edges", [&] { return BipartiteGraph(left, right, edges); });
}

// --- gadgets -----------------------------------------------------------------

Json to_json(const gadget::GadgetGraph& gadget) {
  Json out = header("gadget");
  out["num_vars"] = gadget.num_vars();
  out["num_colors"] = gadget.num_colors();
  out["epsilon"] = to_string(gadget.epsilon());
  out["flavor"] = gadget.flavor() == gadget::Flavor::base ? "base" : "extended";
  Json vertices = Json::array();
  for (Vertex v = 0; v < gadget.graph().num_vertices(); ++v) {
    const auto gv = gadget.vertex(v);
    vertices.push_back(
        {{"id", v}, {"variable", gv.variable}, {"subset", color_list(gv.subset)}, {"weight", to_string(gadget.weight(v))}});
  }
  out["vertices"] = std::move(vertices);
  out["edges"] = edge_list(gadget.graph().edges());
  return out;
}

gadget::GadgetGraph gadget_from_json(const Json& document) {
  expect_kind(document, "gadget");
  const std::size_t vars = as_index(field(document, "num_vars", ""), "/num_vars");
  const auto colors = static_cast<std::uint32_t>(as_index(field(document, "num_colors", ""), "/num_colors"));
  if (colors > ulc::kMaxColors) throw SchemaError("/num_colors", "more than 30 colors");
  const Rational eps = as_rational(field(document, "epsilon", ""), "/epsilon");
  const std::string flavor_name = as<std::string>(field(document, "flavor", ""), "/flavor");
  gadget::Flavor flavor;
  if (flavor_name == "base") {
    flavor = gadget::Flavor::base;
  } else if (flavor_name == "extended") {
    flavor = gadget::Flavor::extended;
  } else {
    throw SchemaError("/flavor", "expected \"base\" or \"extended\"");
  }
  const std::size_t n = vars << colors;
  auto edges = edges_from(array_field(document, "edges", ""), "/edges");
  Graph graph = wrap("/edges", [&] { return Graph(n, std::move(edges)); });
  auto g = wrap("", [&] { return gadget::GadgetGraph(vars, colors, eps, flavor, std::move(graph)); });
  const Json& vertices = array_field(document, "vertices", "");
  if (vertices.size() != n) throw SchemaError("/vertices", "expected " + std::to_string(n) + " vertices");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string at = "/vertices/" + std::to_string(i);
    if (as_index(field(vertices[i], "id", at), at + "/id") != i) throw SchemaError(at + "/id", "ids must be 0..n-1 in order");
    if (as_rational(field(vertices[i], "weight", at), at + "/weight") != g.weight(static_cast<Vertex>(i))) {
      throw SchemaError(at + "/weight", "does not match the weight implied by epsilon");
    }
  }
  return g;
}

// --- blowups -----------------------------------------------------------------

Json to_json(const blowup::BlowupGraph& blowup) {
  Json out = header("blowup");
  out["rho"] = to_string(blowup.rho());
  out["n"] = to_string(blowup.n());
  out["base"] = to_json(blowup.base());
  Json units = Json::array();
  for (Vertex v = 0; v < blowup.base().graph().num_vertices(); ++v) units.push_back(blowup.units(v));
  out["units"] = std::move(units);
  out["num_vertices"] = blowup.num_vertices();
  out["num_edges"] = blowup.graph().num_edges();
  return out;
}

blowup::BlowupGraph blowup_from_json(const Json& document, const blowup::BlowupOptions& options) {
  expect_kind(document, "blowup");
  const Rational rho = as_rational(field(document, "rho", ""), "/rho");
  auto base = gadget_from_json(field(document, "base", ""));
  auto b = wrap("/rho", [&] { return blowup::blow_up(base, rho, options); });
  const Json& units = array_field(document, "units", "");
  if (units.size() != base.graph().num_vertices()) throw SchemaError("/units", "expected one entry per base vertex");
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (as_index(units[i], "/units/" + std::to_string(i)) != b.units(static_cast<Vertex>(i))) {
      throw SchemaError("/units/" + std::to_string(i), "does not match the rounding of n * w(v)");
    }
  }
  return b;
}

// --- matchings ---------------------------------------------------------------

Json to_json(const Matching& matching) {
  Json out = header("matching");
  out["size"] = matching.size();
  out["edges"] = edge_list(matching);
  return out;
}

Matching matching_from_json(const Json& document) {
  expect_kind(document, "matching");
  return edges_from(array_field(document, "edges", ""), "/edges");
}

Json to_json(const fracmatch::FractionalMatching& fm) {
  Json out = header("fractional_matching");
  Json values = Json::array();
  for (const auto& [e, x] : fm.values()) values.push_back({{"u", e.u}, {"v", e.v}, {"value", to_string(x)}});
  out["values"] = std::move(values);
  return out;
}

fracmatch::FractionalMatching fractional_from_json(const Json& document) {
  expect_kind(document, "fractional_matching");
  const Json& values = array_field(document, "values", "");
  fracmatch::FractionalMatching fm;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string at = "/values/" + std::to_string(i);
    const auto u = static_cast<Vertex>(as_index(field(values[i], "u", at), at + "/u"));
    const auto v = static_cast<Vertex>(as_index(field(values[i], "v", at), at + "/v"));
    const Rational x = as_rational(field(values[i], "value", at), at + "/value");
    if (x < 0) throw SchemaError(at + "/value", "values must be nonnegative");
    if (u == v) throw SchemaError(at, "self-loop");
    fm.add(Edge(u, v), x);
  }
  return fm;
}

Json to_json(const fracmatch::SaturationReport& report) {
  Json out = header("saturation_report");
  out["valid"] = report.valid();
  out["capacity_ok"] = report.capacity_ok;
  out["budget_ok"] = report.budget_ok;
  out["support_ok"] = report.support_ok;
  out["saturated"] = report.saturated;
  Json unsaturated = Json::array();
  for (const auto& [v, deficit] : report.unsaturated) unsaturated.push_back({{"vertex", v}, {"deficit", to_string(deficit)}});
  out["unsaturated"] = std::move(unsaturated);
  Json load = Json::array();
  for (const Rational& x : report.load) load.push_back(to_string(x));
  out["load"] = std::move(load);
  out["capacity_violations"] = edge_list(report.capacity_violations);
  out["budget_violations"] = report.budget_violations;
  out["foreign_edges"] = edge_list(report.foreign_edges);
  return out;
}

// --- DOT ---------------------------------------------------------------------

std::string to_dot(const Graph& graph, const VertexLabel& label) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    out << "  " << v;
    if (label) out << " [label=\"" << escape(label(v)) << "\"]";
    out << ";\n";
  }
  for (const Edge& e : graph.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const gadget::GadgetGraph& gadget) {
  return to_dot(gadget.graph(), [&](Vertex v) {
    const auto gv = gadget.vertex(v);
    return "(" + std::to_string(gv.variable) + "," + color_set_label(gv.subset) + ")";
  });
}

std::string to_dot(const blowup::BlowupGraph& blowup) {
  const auto& base = blowup.base();
  return to_dot(blowup.graph(), [&](Vertex c) {
    const auto gv = base.vertex(blowup.base_of(c));
    return "⟨(" + std::to_string(gv.variable) + "," + color_set_label(gv.subset) + ")," +
           std::to_string(blowup.index_of(c)) + "⟩";
  });
}

}  // namespace mmm::harness
