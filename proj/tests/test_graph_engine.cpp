#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pauligraph/cliques.hpp"
#include "pauligraph/errors.hpp"
#include "pauligraph/graph.hpp"
#include "pauligraph/iso.hpp"
#include "pauligraph/spectrum.hpp"

using namespace pauligraph;

namespace {

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

// Octahedron: complete tripartite K_{2,2,2}; the non-edges pair i with i+3.
Graph octahedron() {
  Graph g(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j - i != 3) g.add_edge(i, j);
  return g;
}

Graph cube_graph() {
  Graph g(8);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (__builtin_popcount(i ^ j) == 1) g.add_edge(i, j);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// Exponential-time reference enumerator for small n.
std::vector<std::vector<int>> naive_maximal_cliques(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) verts.push_back(i);
    bool clique = true;
    for (size_t a = 0; a < verts.size() && clique; ++a)
      for (size_t b = a + 1; b < verts.size() && clique; ++b)
        if (!g.adjacent(verts[a], verts[b])) clique = false;
    if (!clique) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (mask & (1u << v)) continue;
      bool all = true;
      for (int u : verts)
        if (!g.adjacent(u, v)) all = false;
      if (all) maximal = false;
    }
    if (maximal) out.push_back(verts);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph relabeled(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph h(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j)) h.add_edge(perm[i], perm[j]);
  return h;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("bitset basics") {
  Bitset b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.first() == 0);
  CHECK(b.next(0) == 64);
  CHECK(b.next(64) == 129);
  CHECK(b.next(129) == -1);
  Bitset c(130);
  c.set(64);
  CHECK(b.count_and(c) == 1);
  CHECK(b.intersects(c));
  CHECK(c.is_subset_of(b));
  CHECK(b.and_not(c).count() == 2);
}

TEST_CASE("graph basics and components") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  CHECK(g.edge_count() == 3);
  auto comps = g.connected_components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1, 2});
  CHECK(comps[1] == std::vector<int>{3, 4});
  Graph sub = g.induced(comps[0]);
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 2);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
}

TEST_CASE("complement is an involution") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    Graph g = random_graph(12, 0.4, rng);
    Graph cc = g.complement().complement();
    for (int i = 0; i < 12; ++i)
      for (int j = i + 1; j < 12; ++j)
        CHECK(g.adjacent(i, j) == cc.adjacent(i, j));
  }
  // Complement of the octahedron: three disjoint edges.
  Graph oc = octahedron().complement();
  CHECK(oc.edge_count() == 3);
  CHECK(oc.connected_components().size() == 3);
}

TEST_CASE("maximal cliques match the naive enumerator") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + int(rng() % 13);  // up to 16
    Graph g = random_graph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
    CliqueFamily cf = maximal_cliques(g);
    CHECK(cf.cliques == naive_maximal_cliques(g));
  }
}

TEST_CASE("clique budget is all-or-nothing") {
  std::mt19937 rng(2);
  Graph g = random_graph(10, 0.5, rng);
  CHECK_THROWS_AS(maximal_cliques(g, 1), BudgetError);
}

TEST_CASE("spectra of closed-form graphs") {
  CHECK(spectrum(complete_graph(4)) ==
        Spectrum::from_entries({{3, 1}, {-1, 3}}));
  // Path on 3 vertices: eigenvalues are 0 and +-sqrt(2); only 0 certifies.
  Spectrum p3 = spectrum(path_graph(3));
  CHECK(p3.entries == std::vector<Spectrum::Entry>{{0, 1}});
  CHECK(p3.residual_degree == 2);
  CHECK(spectrum(octahedron()) ==
        Spectrum::from_entries({{4, 1}, {0, 3}, {-2, 2}}));
  CHECK(spectrum(cube_graph()) ==
        Spectrum::from_entries({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}));
  CHECK(spectrum(petersen()) ==
        Spectrum::from_entries({{3, 1}, {1, 5}, {-2, 4}}));
}

TEST_CASE("spectrum moments on random graphs") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(10 + int(rng() % 8), 0.5, rng);
    Spectrum s = spectrum(g);
    CHECK(s.total_degree() == g.vertex_count());
    long long sum = 0, sumsq = 0;
    for (auto e : s.entries) {
      sum += e.value * e.multiplicity;
      sumsq += e.value * e.value * e.multiplicity;
    }
    CHECK(sumsq <= 2 * g.edge_count());
    if (s.residual_degree == 0) {
      CHECK(sum == 0);
      CHECK(sumsq == 2 * g.edge_count());
    }
  }
}

TEST_CASE("bareiss rank") {
  std::vector<std::vector<BigInt>> id(5, std::vector<BigInt>(5, 0));
  for (int i = 0; i < 5; ++i) id[i][i] = 1;
  CHECK(rank_bareiss(id) == 5);
  std::vector<std::vector<BigInt>> zero(4, std::vector<BigInt>(4, 0));
  CHECK(rank_bareiss(zero) == 0);
  // Rank-1 outer product.
  std::vector<std::vector<BigInt>> outer(3, std::vector<BigInt>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) outer[i][j] = (i + 1) * (j + 2);
  CHECK(rank_bareiss(outer) == 1);
}

TEST_CASE("strongly regular parameters") {
  CHECK(strongly_regular_params(octahedron()) == SrgParams{6, 4, 2, 4});
  CHECK(!strongly_regular_params(path_graph(3)).has_value());
  CHECK(strongly_regular_params(petersen()) == SrgParams{10, 3, 0, 1});
  CHECK(!strongly_regular_params(complete_graph(4)).has_value());
}

TEST_CASE("isomorphism") {
  CHECK(!are_isomorphic(complete_graph(3), path_graph(3)));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(12, 0.5, rng);
    Graph h = relabeled(g, rng);
    auto map = find_isomorphism(g, h);
    REQUIRE(map.has_value());
    for (int i = 0; i < 12; ++i)
      for (int j = i + 1; j < 12; ++j)
        CHECK(g.adjacent(i, j) == h.adjacent((*map)[i], (*map)[j]));
  }
  Graph cube = cube_graph();
  CHECK(are_isomorphic(cube, relabeled(cube, rng)));
}

TEST_CASE("automorphism orders of known graphs") {
  CHECK(aut_order(complete_graph(4)) == 24);
  CHECK(aut_order(cycle_graph(6)) == 12);
  CHECK(aut_order(cube_graph()) == 48);
  CHECK(aut_order(octahedron()) == 48);
  CHECK(aut_order(petersen()) == 120);
  // K_{3,3}
  Graph k33(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
  CHECK(aut_order(k33) == 72);
}

TEST_CASE("automorphism order properties") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 6 + int(rng() % 8);
    Graph g = random_graph(n, 0.5, rng);
    BigInt a = aut_order(g);
    CHECK(factorial(n) % a == 0);
    CHECK(aut_order(relabeled(g, rng)) == a);
    CHECK(aut_order(g.complement()) == a);
  }
  CHECK(vertex_orbits(cube_graph()).size() == 1);
  CHECK(vertex_orbits(cycle_graph(7)).size() == 1);
  CHECK(vertex_orbits(path_graph(4)).size() == 2);
}

TEST_CASE("edge list and dot round trip") {
  std::mt19937 rng(3);
  Graph g = random_graph(9, 0.4, rng);
  Graph h = read_edge_list(to_edge_list(g));
  REQUIRE(h.vertex_count() == g.vertex_count());
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j) CHECK(g.adjacent(i, j) == h.adjacent(i, j));
  // DIMACS flavor.
  Graph d = read_edge_list("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(d.vertex_count() == 3);
  CHECK(d.adjacent(0, 1));
  CHECK(d.adjacent(1, 2));
  CHECK(!d.adjacent(0, 2));
  std::string dot = to_dot(octahedron());
  CHECK(dot.find("v0 -- v1") != std::string::npos);
}
