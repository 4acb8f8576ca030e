#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmm/fracmatch.hpp"
#include "mmm/harness/serialize.hpp"
#include "mmm/rational.hpp"
#include "mmm/ulc.hpp"

namespace mmm::harness {

using mmm::to_string;

/// One grid point. Defaults describe Setup A: three variables on a cycle,
/// two colors, epsilon 1/4, xi 0, rho 1/2, seed 1.
struct LemmaParams {
  std::size_t num_vars = 3;
  std::uint32_t num_colors = 2;
  Rational epsilon{1, 4};
  Rational xi{0};
  Rational rho{1, 2};
  std::uint64_t seed = 1;
  ulc::Topology topology = ulc::Topology::cycle;
  double p_edge = 0.5;
  /// Side size of the input graph for the SSEH lemmas.
  std::size_t sseh_n = 4;
  fracmatch::Strategy strategy = fracmatch::Strategy::hamiltonian;
  /// Exact-solver node limit.
  std::uint64_t node_limit = 50'000'000;
  /// Maximal matchings enumerated before switching to sampling.
  std::uint64_t enumeration_limit = 100'000;
  /// Random maximal matchings drawn where a lemma samples.
  std::size_t samples = 200;
};

enum class Verdict { pass, fail, budget };
enum class Mode { constructive, surrogate };

struct LemmaReport {
  std::string id;
  Mode mode = Mode::constructive;
  LemmaParams params;
  std::string relation;
  Rational lhs;
  Rational rhs;
  /// Distance from the bound in the direction of the relation (0 for equalities).
  Rational slack;
  Verdict verdict = Verdict::fail;
  std::string detail;
  double runtime_seconds = 0;
};

const std::vector<std::string>& lemma_ids();

/// Runs the pipeline behind one lemma and re-validates every witness with the
/// independent checkers. Budget exhaustion gives Verdict::budget. Throws
/// InvalidArgument for an unknown id or parameters the pipeline rejects.
LemmaReport verify_lemma(const std::string& id, const LemmaParams& params);

std::string to_string(Verdict verdict);
std::string to_string(Mode mode);
std::string to_string(ulc::Topology topology);
ulc::Topology parse_topology(const std::string& name);
fracmatch::Strategy parse_strategy(const std::string& name);

/// Runtime is left out so that reports are byte-stable.
Json to_json(const LemmaReport& report);
Json to_json(const LemmaParams& params);

}  // namespace mmm::harness
