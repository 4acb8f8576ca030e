#include "mmm/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace mmm::harness {

namespace {

template <typename T, typename Read>
std::vector<T> read_list(const Json& object, const std::string& key, const std::string& where,
                         const std::vector<T>& fallback, Read read) {
  auto it = object.find(key);
  if (it == object.end()) return fallback;
  const std::string at = where + "/" + key;
  if (!it->is_array()) throw SchemaError(at, "expected an array");
  std::vector<T> out;
  for (std::size_t i = 0; i < it->size(); ++i) out.push_back(read((*it)[i], at + "/" + std::to_string(i)));
  if (out.empty()) throw SchemaError(at, "grid axis is empty");
  return out;
}

std::uint64_t read_count(const Json& value, const std::string& where) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    throw SchemaError(where, "expected a nonnegative integer");
  }
  return value.get<std::uint64_t>();
}

Rational read_rational(const Json& value, const std::string& where) {
  if (!value.is_string()) throw SchemaError(where, "expected a \"num/den\" string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw SchemaError(where, e.what());
  }
}

std::string read_string(const Json& value, const std::string& where) {
  if (!value.is_string()) throw SchemaError(where, "expected a string");
  return value.get<std::string>();
}

template <typename T>
void read_scalar(const Json& object, const std::string& key, const std::string& where, T& target) {
  auto it = object.find(key);
  if (it == object.end()) return;
  target = static_cast<T>(read_count(*it, where + "/" + key));
}

template <typename T, typename Write>
Json write_list(const std::vector<T>& values, Write write) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(write(v));
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

bool ExperimentResult::any_fail() const {
  return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.verdict == Verdict::fail; });
}

bool ExperimentResult::any_budget() const {
  return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.verdict == Verdict::budget; });
}

std::vector<LemmaParams> expand(const ExperimentConfig& config) {
  const Grid& g = config.grid;
  std::vector<LemmaParams> out;
  for (auto num_vars : g.num_vars)
    for (auto num_colors : g.num_colors)
      for (const auto& epsilon : g.epsilon)
        for (const auto& xi : g.xi)
          for (const auto& rho : g.rho)
            for (auto seed : g.seed)
              for (auto topology : g.topology)
                for (auto sseh_n : g.sseh_n) {
                  LemmaParams p = config.base;
                  p.num_vars = num_vars;
                  p.num_colors = num_colors;
                  p.epsilon = epsilon;
                  p.xi = xi;
                  p.rho = rho;
                  p.seed = seed;
                  p.topology = topology;
                  p.sseh_n = sseh_n;
                  out.push_back(p);
                }
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  for (const auto& id : config.lemmas) {
    if (std::find(lemma_ids().begin(), lemma_ids().end(), id) == lemma_ids().end()) {
      throw InvalidArgument("unknown lemma id \"" + id + "\"");
    }
  }
  const auto points = config.lemmas.empty() ? std::vector<LemmaParams>{} : expand(config);
  const std::size_t total = points.size() * config.lemmas.size();
  ExperimentResult result;
  result.rows.resize(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        result.rows[i] = verify_lemma(config.lemmas[i % config.lemmas.size()], points[i / config.lemmas.size()]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  // The first error in grid order wins, independent of scheduling.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return result;
}

std::string to_csv(const ExperimentResult& result) {
  std::string out =
      "lemma,mode,num_vars,num_colors,epsilon,xi,rho,seed,topology,sseh_n,relation,lhs,rhs,slack,verdict,detail\n";
  for (const auto& r : result.rows) {
    const auto& p = r.params;
    const std::vector<std::string> fields{r.id,
                                          to_string(r.mode),
                                          std::to_string(p.num_vars),
                                          std::to_string(p.num_colors),
                                          to_string(p.epsilon),
                                          to_string(p.xi),
                                          to_string(p.rho),
                                          std::to_string(p.seed),
                                          to_string(p.topology),
                                          std::to_string(p.sseh_n),
                                          r.relation,
                                          to_string(r.lhs),
                                          to_string(r.rhs),
                                          to_string(r.slack),
                                          to_string(r.verdict),
                                          r.detail};
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
    out += "\n";
  }
  return out;
}

ExperimentConfig config_from_json(const Json& document) {
  if (kind_of(document) != "experiment_config") {
    throw SchemaError("/kind", "expected \"experiment_config\", got \"" + kind_of(document) + "\"");
  }
  ExperimentConfig config;
  if (auto it = document.find("grid"); it != document.end()) {
    const Json& grid = *it;
    if (!grid.is_object()) throw SchemaError("/grid", "expected an object");
    Grid& g = config.grid;
    auto count = [](const Json& v, const std::string& w) { return read_count(v, w); };
    g.num_vars = read_list<std::size_t>(grid, "num_vars", "/grid", g.num_vars, count);
    g.num_colors = read_list<std::uint32_t>(grid, "num_colors", "/grid", g.num_colors,
                                            [](const Json& v, const std::string& w) {
                                              return static_cast<std::uint32_t>(read_count(v, w));
                                            });
    g.epsilon = read_list<Rational>(grid, "epsilon", "/grid", g.epsilon, read_rational);
    g.xi = read_list<Rational>(grid, "xi", "/grid", g.xi, read_rational);
    g.rho = read_list<Rational>(grid, "rho", "/grid", g.rho, read_rational);
    g.seed = read_list<std::uint64_t>(grid, "seed", "/grid", g.seed, count);
    g.topology = read_list<ulc::Topology>(grid, "topology", "/grid", g.topology,
                                          [](const Json& v, const std::string& w) {
                                            try {
                                              return parse_topology(read_string(v, w));
                                            } catch (const SchemaError&) {
                                              throw;
                                            } catch (const InvalidArgument& e) {
                                              throw SchemaError(w, e.what());
                                            }
                                          });
    g.sseh_n = read_list<std::size_t>(grid, "sseh_n", "/grid", g.sseh_n, count);
  }
  if (auto it = document.find("lemmas"); it != document.end()) {
    if (!it->is_array()) throw SchemaError("/lemmas", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = "/lemmas/" + std::to_string(i);
      std::string id = read_string((*it)[i], at);
      if (std::find(lemma_ids().begin(), lemma_ids().end(), id) == lemma_ids().end()) {
        throw SchemaError(at, "unknown lemma id \"" + id + "\"");
      }
      config.lemmas.push_back(std::move(id));
    }
  }
  if (auto it = document.find("budget"); it != document.end()) {
    if (!it->is_object()) throw SchemaError("/budget", "expected an object");
    read_scalar(*it, "node_limit", "/budget", config.base.node_limit);
    read_scalar(*it, "enumeration_limit", "/budget", config.base.enumeration_limit);
    read_scalar(*it, "samples", "/budget", config.base.samples);
  }
  if (auto it = document.find("strategy"); it != document.end()) {
    try {
      config.base.strategy = parse_strategy(read_string(*it, "/strategy"));
    } catch (const SchemaError&) {
      throw;
    } catch (const InvalidArgument& e) {
      throw SchemaError("/strategy", e.what());
    }
  }
  if (auto it = document.find("p_edge"); it != document.end()) {
    if (!it->is_number()) throw SchemaError("/p_edge", "expected a number");
    config.base.p_edge = it->get<double>();
  }
  read_scalar(document, "threads", "", config.threads);
  if (auto it = document.find("output"); it != document.end()) config.output = read_string(*it, "/output");
  return config;
}

Json to_json(const ExperimentConfig& config) {
  const Grid& g = config.grid;
  auto same = [](const auto& v) { return v; };
  auto rational = [](const Rational& r) { return to_string(r); };
  Json out;
  out["schema"] = kSchema;
  out["kind"] = "experiment_config";
  out["grid"] = {{"num_vars", write_list(g.num_vars, same)},
                 {"num_colors", write_list(g.num_colors, same)},
                 {"epsilon", write_list(g.epsilon, rational)},
                 {"xi", write_list(g.xi, rational)},
                 {"rho", write_list(g.rho, rational)},
                 {"seed", write_list(g.seed, same)},
                 {"topology", write_list(g.topology, [](ulc::Topology t) { return to_string(t); })},
                 {"sseh_n", write_list(g.sseh_n, same)}};
  out["lemmas"] = config.lemmas;
  out["budget"] = {{"node_limit", config.base.node_limit},
                   {"enumeration_limit", config.base.enumeration_limit},
                   {"samples", config.base.samples}};
  out["strategy"] = config.base.strategy == fracmatch::Strategy::hamiltonian ? "hamiltonian" : "uniform";
  out["p_edge"] = config.base.p_edge;
  out["threads"] = config.threads;
  if (!config.output.empty()) out["output"] = config.output;
  return out;
}

}  // namespace mmm::harness
