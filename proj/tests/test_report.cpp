#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "pauligraph/cliques.hpp"
#include "pauligraph/errors.hpp"
#include "pauligraph/pauli.hpp"
#include "pauligraph/report.hpp"

using namespace pauligraph;
namespace rep = pauligraph::report;

TEST_CASE("analyze two qubits") {
  rep::Config cfg;
  rep::Result res = rep::analyze(Factorization::parse("2x2"), cfg);
  const auto& p = res.payload;
  CHECK(p["observables"] == 15);
  CHECK(p["clique_census"]["3"] == 15);
  CHECK(p["geometry"]["split"]["display"] == "15");
  CHECK(p["pauli_spectrum"]["display"] == "{6^1,1^9,-3^5}");
}

TEST_CASE("analyze single qudit attaches the ring census") {
  rep::Config cfg;
  rep::Result res = rep::analyze(Factorization::parse("4"), cfg);
  const auto& p = res.payload;
  CHECK(p["geometry"]["split"]["display"] == "6+1");
  CHECK(p["geometry"]["dual_spectrum"]["display"] == "{4^1,0^4,-2^2}");
  CHECK(p["ring"]["sigma"] == 7);
  CHECK(p["ring"]["psi"] == 6);
  CHECK(p["ring"]["free_lines"] == 6);
  CHECK(p["ring"]["clique_line_bijection"] == "ok");
}

TEST_CASE("analyze qubit-quartit split") {
  rep::Config cfg;
  rep::Result res = rep::analyze(Factorization::parse("2x4"), cfg);
  CHECK(res.payload["geometry"]["split"]["display"] == "36+3");
  // Component sizes of the dual graph: one of 36 plus three singletons.
  CHECK(res.payload["geometry"]["split"]["parts"] ==
        rep::json::array({36}));
  CHECK(res.payload["geometry"]["split"]["singletons"] == 3);
}

TEST_CASE("analyze is reproducible bit for bit") {
  rep::Config cfg;
  rep::Result a = rep::analyze(Factorization::parse("2x4"), cfg);
  rep::Result b = rep::analyze(Factorization::parse("2x4"), cfg);
  CHECK(a.payload.dump() == b.payload.dump());
}

TEST_CASE("budget violations name the stage") {
  rep::Config cfg;
  cfg.vertex_budget = 3;
  try {
    rep::analyze(Factorization::parse("2x2"), cfg);
    FAIL("expected a budget refusal");
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("build_pauli_graph") != std::string::npos);
  }
}

TEST_CASE("export formats") {
  rep::Config cfg;
  rep::Result res = rep::analyze(Factorization::parse("4"), cfg);
  std::string j = rep::export_report(res.full(), "json");
  rep::json round = rep::json::parse(j);
  CHECK(round["report"].dump() == res.payload.dump());
  std::string csv = rep::export_report(res.full(), "csv");
  CHECK(csv.find("4,4,15,6+1") != std::string::npos);
  CHECK_THROWS_AS(rep::export_report(res.full(), "yaml"),
                  std::invalid_argument);
  CHECK_THROWS_AS(rep::export_report(res.full(), "dot"),
                  std::invalid_argument);
}

TEST_CASE("dot export of the doily") {
  Graph g = build_pauli_graph(Factorization::parse("2x2"));
  std::string dot = to_dot(g, "doily");
  // 15 nodes and 45 edges.
  size_t nodes = 0, edges = 0, pos = 0;
  while ((pos = dot.find("label=", pos)) != std::string::npos) {
    ++nodes;
    ++pos;
  }
  pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
    ++edges;
    ++pos;
  }
  CHECK(nodes == 15);
  CHECK(edges == 45);
}

TEST_CASE("environment seeds configuration") {
  setenv("PAULIGRAPH_VERTEX_BUDGET", "123", 1);
  setenv("PAULIGRAPH_CLIQUE_FILTER", "all", 1);
  rep::Config cfg = rep::Config::from_env();
  CHECK(cfg.vertex_budget == 123);
  CHECK(cfg.all_clique_sizes);
  unsetenv("PAULIGRAPH_VERTEX_BUDGET");
  unsetenv("PAULIGRAPH_CLIQUE_FILTER");
  rep::Config fresh = rep::Config::from_env();
  CHECK(fresh.vertex_budget == 10000);
  CHECK(!fresh.all_clique_sizes);
}

TEST_CASE("expected table loads and covers the full census") {
  rep::Config cfg;
  std::ifstream in(cfg.expected_table_path());
  REQUIRE(in.good());
  rep::json data;
  in >> data;
  CHECK(data["rows"].size() == 21);
  CHECK(data["discrepancies"].size() >= 5);
}
