// Command-line front end: analyze a factorization, reproduce the stored
// census table, inspect isotropic lines, polar spaces, spreads, and
// automorphism orders. Exit codes: 0 success, 1 verification failure,
// 2 budget refusal.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pauligraph/cliques.hpp"
#include "pauligraph/errors.hpp"
#include "pauligraph/iso.hpp"
#include "pauligraph/numtheory.hpp"
#include "pauligraph/pauli.hpp"
#include "pauligraph/polar.hpp"
#include "pauligraph/report.hpp"
#include "pauligraph/spectrum.hpp"
#include "pauligraph/zq_lattice.hpp"

using namespace pauligraph;
namespace rep = pauligraph::report;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void add_budget_flags(CLI::App* cmd, rep::Config& cfg) {
  cmd->add_option("--vertex-budget", cfg.vertex_budget,
                  "largest allowed vertex count for constructed graphs");
  cmd->add_option("--clique-budget", cfg.clique_budget,
                  "largest allowed number of maximal cliques");
  cmd->add_option("--aut-budget", cfg.aut_budget,
                  "largest graph passed to the automorphism search");
  cmd->add_option("--spectrum-budget", cfg.spectrum_budget,
                  "largest graph passed to the exact spectrum routine");
  cmd->add_option("--oracle-cap", cfg.oracle_cap,
                  "largest dimension for the dense matrix oracle");
  cmd->add_option("--threads", cfg.threads,
                  "reserved; stages currently run single-threaded");
  cmd->add_flag("--all-clique-sizes", cfg.all_clique_sizes,
                "build the geometry on all maximal cliques, not only size q-1");
  cmd->add_option("--data-dir", cfg.data_dir,
                  "directory holding table1_expected.json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact census engine for generalized Pauli groups and their "
               "commutation geometries"};
  app.require_subcommand(1);
  rep::Config cfg = rep::Config::from_env();

  // analyze
  std::string analyze_spec;
  std::string analyze_out;
  std::string analyze_dot;
  std::string analyze_dot_out;
  bool analyze_csv = false;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "full pipeline for one factorization");
  analyze_cmd->add_option("spec", analyze_spec,
                          "factorization, e.g. 4 or 2x2 or 2x3x4")
      ->required();
  analyze_cmd->add_flag("--aut", cfg.compute_aut,
                        "also compute automorphism orders within budget");
  analyze_cmd->add_flag("--csv", analyze_csv, "emit a one-line csv summary");
  analyze_cmd->add_option("-o,--out", analyze_out, "write the report here");
  analyze_cmd->add_option(
      "--dot", analyze_dot,
      "emit DOT for a computed graph: pauli, dual, or k<number>");
  analyze_cmd->add_option("--dot-out", analyze_dot_out,
                          "write the DOT output here");
  add_budget_flags(analyze_cmd, cfg);

  // table1
  std::string table_out;
  bool table_csv = false;
  auto* table_cmd = app.add_subcommand(
      "table1", "recompute the stored census table with verdicts");
  table_cmd->add_flag("--csv", table_csv, "emit csv instead of json");
  table_cmd->add_option("-o,--out", table_out, "write the report here");
  add_budget_flags(table_cmd, cfg);

  // isotropic
  long long iso_q = 0;
  auto* iso_cmd = app.add_subcommand(
      "isotropic", "isotropic lines and projective census of Z_q^2");
  iso_cmd->add_option("q", iso_q, "modulus q >= 2")->required();
  add_budget_flags(iso_cmd, cfg);

  // polar
  long long polar_p = 0;
  int polar_n = 0;
  auto* polar_cmd = app.add_subcommand(
      "polar", "symplectic polar space census and puncture");
  polar_cmd->add_option("p", polar_p, "prime order")->required();
  polar_cmd->add_option("n", polar_n, "rank")->required();
  add_budget_flags(polar_cmd, cfg);

  // spread
  long long spread_p = 0;
  int spread_n = 0;
  auto* spread_cmd =
      app.add_subcommand("spread", "find a spread of disjoint generators");
  spread_cmd->add_option("p", spread_p, "prime order")->required();
  spread_cmd->add_option("n", spread_n, "rank")->required();
  add_budget_flags(spread_cmd, cfg);

  // aut
  std::string aut_path;
  auto* aut_cmd = app.add_subcommand(
      "aut", "automorphism group order of a graph from an edge-list file");
  aut_cmd->add_option("graph-file", aut_path, "edge list (n N / u v lines)")
      ->required();
  add_budget_flags(aut_cmd, cfg);

  // export
  std::string export_in;
  std::string export_format;
  std::string export_out;
  auto* export_cmd = app.add_subcommand(
      "export", "re-serialize a report (json, csv) or a graph file (dot)");
  export_cmd->add_option("input", export_in, "report json or edge-list file")
      ->required();
  export_cmd->add_option("format", export_format, "json, csv, or dot")
      ->required();
  export_cmd->add_option("-o,--out", export_out, "write here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      Factorization f = Factorization::parse(analyze_spec);
      rep::Result res = rep::analyze(f, cfg);
      if (!analyze_dot.empty()) {
        Graph g = build_pauli_graph(f, cfg.vertex_budget);
        if (analyze_dot == "pauli") {
          emit(to_dot(g, "pauli"), analyze_dot_out);
        } else {
          CliqueFamily all = maximal_cliques(g, cfg.clique_budget);
          CliqueFamily family =
              cfg.all_clique_sizes
                  ? all
                  : all.subfamily(all.indices_of_size(int(f.dimension - 1)));
          if (analyze_dot == "dual") {
            emit(to_dot(disjointness_graph(family), "dual"), analyze_dot_out);
          } else if (analyze_dot.size() > 1 && analyze_dot[0] == 'k') {
            int k = std::stoi(analyze_dot.substr(1));
            emit(to_dot(k_intersection_graph(family, k), "kgraph"),
                 analyze_dot_out);
          } else {
            throw std::invalid_argument("unknown --dot target " + analyze_dot);
          }
        }
      }
      emit(rep::export_report(res.full(), analyze_csv ? "csv" : "json"),
           analyze_out);
      return 0;
    }
    if (*table_cmd) {
      rep::Result res = rep::table1(cfg);
      emit(rep::export_report(res.full(), table_csv ? "csv" : "json"),
           table_out);
      return res.ok ? 0 : 1;
    }
    if (*iso_cmd) {
      auto lines = zq::isotropic_lines(iso_q, cfg.vertex_budget);
      long long free_lines = 0;
      std::cout << "isotropic lines of Z_" << iso_q << "^2:\n";
      for (const auto& line : lines) {
        std::cout << (line.free ? "  free    {" : "  nonfree {");
        for (size_t i = 0; i < line.points.size(); ++i) {
          if (i) std::cout << ",";
          std::cout << "(" << line.points[i].b << "," << line.points[i].c
                    << ")";
        }
        std::cout << "}\n";
        if (line.free) ++free_lines;
      }
      std::cout << "lines = " << lines.size() << ", sigma(" << iso_q
                << ") = " << nt::divisor_sigma(iso_q) << "\n";
      std::cout << "free lines = " << free_lines << ", psi(" << iso_q
                << ") = " << nt::dedekind_psi(iso_q) << "\n";
      std::cout << "admissible vectors = "
                << zq::admissible_vectors(iso_q).size() << ", J2(" << iso_q
                << ") = " << nt::jordan_j2(iso_q) << "\n";
      zq::clique_line_bijection(iso_q, cfg.vertex_budget);
      std::cout << "clique-line bijection: ok\n";
      return 0;
    }
    if (*polar_cmd) {
      auto ps = polar::polar_space(polar_p, polar_n, cfg.vertex_budget,
                                   cfg.clique_budget);
      std::cout << "points = " << ps.points.size()
                << ", generators = " << ps.generators.size() << "\n";
      auto pu = polar::puncture(ps);
      std::cout << "puncture at point 0: lines through base = "
                << pu.lines_through_base
                << ", surviving points = " << pu.surviving_points
                << ", surviving generators = "
                << pu.surviving_generators.size() << "\n";
      if (pu.dual.vertex_count() <= cfg.spectrum_budget)
        std::cout << "punctured dual spectrum = "
                  << spectrum(pu.dual, {cfg.spectrum_budget}).display() << "\n";
      return 0;
    }
    if (*spread_cmd) {
      auto ps = polar::polar_space(spread_p, spread_n, cfg.vertex_budget,
                                   cfg.clique_budget);
      auto spread = polar::find_spread(ps);
      std::cout << "spread of " << spread.generator_indices.size()
                << " disjoint generators:\n";
      for (int g : spread.generator_indices) {
        std::cout << " ";
        for (int v : ps.generators.cliques[g]) std::cout << " " << v;
        std::cout << "\n";
      }
      return 0;
    }
    if (*aut_cmd) {
      Graph g = read_edge_list(read_file(aut_path));
      std::cout << "vertices = " << g.vertex_count()
                << ", edges = " << g.edge_count() << "\n";
      std::cout << "aut order = " << aut_order(g, {cfg.aut_budget}).str()
                << "\n";
      return 0;
    }
    if (*export_cmd) {
      if (export_format == "dot") {
        Graph g = read_edge_list(read_file(export_in));
        emit(to_dot(g), export_out);
      } else {
        rep::json report = rep::json::parse(read_file(export_in));
        emit(rep::export_report(report, export_format), export_out);
      }
      return 0;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
