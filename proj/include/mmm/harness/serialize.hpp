#pragma once

#include <functional>
#include <string>

#include "json.hpp"
#include "mmm/bipartite.hpp"
#include "mmm/blowup.hpp"
#include "mmm/errors.hpp"
#include "mmm/fracmatch.hpp"
#include "mmm/gadget.hpp"
#include "mmm/graph.hpp"
#include "mmm/ulc.hpp"

/// JSON and DOT encodings. Every JSON document carries "schema" and "kind";
/// rationals are "num/den" strings, color sets are sorted color lists.
namespace mmm::harness {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "mmm-gadgets/1";

/// Malformed document. The message starts with a JSON pointer to the offending field.
class SchemaError : public InvalidArgument {
 public:
  SchemaError(const std::string& location, const std::string& message)
      : InvalidArgument(location + ": " + message), location_(location) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& document);
/// Parses text, reporting syntax errors as SchemaError at "/".
Json parse(const std::string& text);
/// Reads the "kind" field after checking "schema".
std::string kind_of(const Json& document);

Json to_json(const ulc::UlcInstance& instance);
ulc::UlcInstance instance_from_json(const Json& document);

Json to_json(const Graph& graph);
Graph graph_from_json(const Json& document);

Json to_json(const BipartiteGraph& graph);
BipartiteGraph bipartite_from_json(const Json& document);

Json to_json(const gadget::GadgetGraph& gadget);
/// Rebuilds the gadget and checks each stored weight against the recomputed one.
gadget::GadgetGraph gadget_from_json(const Json& document);

/// Stores the base gadget, rho and the per-vertex copy units; edges are implied.
Json to_json(const blowup::BlowupGraph& blowup);
blowup::BlowupGraph blowup_from_json(const Json& document, const blowup::BlowupOptions& options = {});

Json to_json(const Matching& matching);
Matching matching_from_json(const Json& document);

Json to_json(const fracmatch::FractionalMatching& fm);
fracmatch::FractionalMatching fractional_from_json(const Json& document);

Json to_json(const fracmatch::SaturationReport& report);

/// "{}", "{0}", "{0,2}".
std::string color_set_label(ulc::ColorSet set);

using VertexLabel = std::function<std::string(Vertex)>;

/// Undirected DOT graph; vertices without a label function are named by id.
std::string to_dot(const Graph& graph, const VertexLabel& label = {});
/// Labels "(x,{..})".
std::string to_dot(const gadget::GadgetGraph& gadget);
/// Labels "⟨(x,{..}),i⟩".
std::string to_dot(const blowup::BlowupGraph& blowup);

}  // namespace mmm::harness
