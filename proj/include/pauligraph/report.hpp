#pragma once

#include <string>

#include <json.hpp>

#include "pauligraph/cliques.hpp"
#include "pauligraph/graph.hpp"
#include "pauligraph/pauli.hpp"

namespace pauligraph::report {

using json = nlohmann::ordered_json;

// Pipeline budgets and switches. Environment variables PAULIGRAPH_* seed the
// defaults; command-line flags override both.
struct Config {
  long long vertex_budget = 10000;
  long long clique_budget = 10'000'000;
  int aut_budget = 150;
  int spectrum_budget = 2000;
  int pauli_spectrum_budget = 300;  // Pauli-graph spectra only up to here
  long long oracle_cap = 16;
  bool all_clique_sizes = false;  // geometry on all maximal cliques, not q-1
  bool compute_aut = false;
  int threads = 1;  // reserved; stages currently run single-threaded
  std::string data_dir;

  static Config from_env();
  std::string expected_table_path() const;
};

// Deterministic payload plus segregated wall-clock data. Two runs with the
// same configuration produce bit-identical payloads.
struct Result {
  json payload;
  json timings_ms;
  bool ok = true;

  json full() const;
};

// Full pipeline for one factorization: observables, Pauli graph, clique
// census, dual-graph split, k-point intersection structure, spectra, ring
// census for single factors, optional automorphism orders.
Result analyze(const Factorization& f, const Config& cfg);

// Recompute every row of the stored expected-value table and attach
// PASS/FAIL/SKIPPED verdicts, plus the computed truth for each flagged
// discrepancy in the published census.
Result table1(const Config& cfg);

// Serialize a result produced by analyze or table1. Formats: json, csv.
std::string export_report(const json& full_report, const std::string& format);

// Helpers shared with the CLI.
json spectrum_json(const Graph& g, int budget);
std::string split_display(const Graph& dual);

}  // namespace pauligraph::report
