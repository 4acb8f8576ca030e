#pragma once

#include <string>
#include <vector>

#include "mmm/harness/lemmas.hpp"

namespace mmm::harness {

/// Cartesian grid of lemma parameters. The first listed field varies slowest.
struct Grid {
  std::vector<std::size_t> num_vars{3};
  std::vector<std::uint32_t> num_colors{2};
  std::vector<Rational> epsilon{Rational(1, 4)};
  std::vector<Rational> xi{Rational(0)};
  std::vector<Rational> rho{Rational(1, 2)};
  std::vector<std::uint64_t> seed{1};
  std::vector<ulc::Topology> topology{ulc::Topology::cycle};
  std::vector<std::size_t> sseh_n{4};
};

struct ExperimentConfig {
  Grid grid;
  std::vector<std::string> lemmas;
  /// Budgets and fixed settings shared by every grid point.
  LemmaParams base;
  unsigned threads = 1;
  /// CSV destination; empty means the caller decides.
  std::string output;
};

struct ExperimentResult {
  /// Grid order, then lemma order.
  std::vector<LemmaReport> rows;
  bool any_fail() const;
  bool any_budget() const;
};

std::vector<LemmaParams> expand(const ExperimentConfig& config);

/// Grid points run on up to `threads` workers; rows keep grid order.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Header plus one line per row; runtime is omitted so tables are byte-stable.
std::string to_csv(const ExperimentResult& result);

/// Document of kind "experiment_config". Missing fields take the defaults above.
ExperimentConfig config_from_json(const Json& document);
Json to_json(const ExperimentConfig& config);

}  // namespace mmm::harness
