#include "pauligraph/cliques.hpp"

#include <algorithm>

#include "pauligraph/errors.hpp"

namespace pauligraph {

namespace {

struct CliqueCollector {
  const Graph& g;
  long long budget;
  std::vector<std::vector<int>> out;

  // Tomita-style pivoting: branch only on candidates outside the pivot's
  // neighborhood. R is the current clique, P candidates, X excluded.
  void expand(std::vector<int>& r, Bitset p, Bitset x) {
    if (!p.any() && !x.any()) {
      if ((long long)out.size() >= budget)
        throw BudgetError("maximal_cliques: clique budget exceeded");
      out.push_back(r);
      return;
    }
    int pivot = -1, best = -1;
    for (int u = p.first(); u >= 0; u = p.next(u)) {
      int c = p.count_and(g.row(u));
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (int u = x.first(); u >= 0; u = x.next(u)) {
      int c = p.count_and(g.row(u));
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    Bitset branch = p.and_not(g.row(pivot));
    for (int v = branch.first(); v >= 0; v = branch.next(v)) {
      r.push_back(v);
      expand(r, p & g.row(v), x & g.row(v));
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }
};

}  // namespace

CliqueFamily maximal_cliques(const Graph& g, long long clique_budget) {
  const int n = g.vertex_count();
  CliqueCollector col{g, clique_budget, {}};
  Bitset p(n), x(n);
  for (int i = 0; i < n; ++i) p.set(i);
  std::vector<int> r;
  if (n > 0) col.expand(r, p, x);
  for (auto& c : col.out) std::sort(c.begin(), c.end());
  std::sort(col.out.begin(), col.out.end());

  CliqueFamily cf;
  cf.vertex_count = n;
  cf.cliques = std::move(col.out);
  cf.members.reserve(cf.cliques.size());
  for (const auto& c : cf.cliques) {
    cf.members.push_back(Bitset::from_vector(n, c));
    ++cf.by_size[int(c.size())];
  }
  return cf;
}

CliqueFamily CliqueFamily::subfamily(const std::vector<int>& which) const {
  CliqueFamily out;
  out.vertex_count = vertex_count;
  for (int i : which) {
    out.members.push_back(members[i]);
    out.cliques.push_back(cliques[i]);
    ++out.by_size[int(cliques[i].size())];
  }
  return out;
}

std::vector<int> CliqueFamily::indices_of_size(int k) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (int(cliques[i].size()) == k) out.push_back(i);
  return out;
}

Graph disjointness_graph(const CliqueFamily& cf) {
  const int m = cf.size();
  Graph g(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (cf.disjoint(a, b)) g.add_edge(a, b);
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) labels[a] = std::to_string(a);
  g.set_labels(std::move(labels));
  return g;
}

Graph k_intersection_graph(const CliqueFamily& cf, int k) {
  if (k < 0) throw std::invalid_argument("k_intersection_graph: k < 0");
  const int m = cf.size();
  Graph g(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (cf.intersection_size(a, b) == k) g.add_edge(a, b);
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) labels[a] = std::to_string(a);
  g.set_labels(std::move(labels));
  return g;
}

std::set<int> intersection_profile(const CliqueFamily& cf) {
  std::set<int> out;
  for (int a = 0; a < cf.size(); ++a)
    for (int b = a + 1; b < cf.size(); ++b)
      out.insert(cf.intersection_size(a, b));
  return out;
}

}  // namespace pauligraph
