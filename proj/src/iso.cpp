#include "pauligraph/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pauligraph/errors.hpp"

namespace pauligraph {

namespace {

// Ordered coloring of the vertices of one graph. Refinement signatures are
// compared across two graphs, so new color ids must be assigned from the
// merged signature order (see refine_pair).
using Coloring = std::vector<int>;

struct Signature {
  int old_color;
  std::vector<int> neighbor_counts;  // count of neighbors per color id
  auto operator<=>(const Signature&) const = default;
};

int color_count(const Coloring& c) {
  int m = 0;
  for (int x : c) m = std::max(m, x + 1);
  return m;
}

std::vector<Signature> signatures(const Graph& g, const Coloring& c) {
  const int n = g.vertex_count();
  const int k = color_count(c);
  std::vector<Signature> sig(n);
  for (int v = 0; v < n; ++v) {
    sig[v].old_color = c[v];
    sig[v].neighbor_counts.assign(k, 0);
    for (int u = g.row(v).first(); u >= 0; u = g.row(v).next(u))
      ++sig[v].neighbor_counts[c[u]];
  }
  return sig;
}

// One refinement round applied to both graphs in lockstep. New colors come
// from the merged, sorted signature list so that equal signatures get equal
// ids on both sides. Returns false when the signature multisets differ
// (no isomorphism can respect the colorings).
bool refine_round_pair(const Graph& g1, Coloring& c1, const Graph& g2,
                       Coloring& c2, bool& changed) {
  auto s1 = signatures(g1, c1);
  auto s2 = signatures(g2, c2);
  std::vector<Signature> all = s1;
  all.insert(all.end(), s2.begin(), s2.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  auto id_of = [&](const Signature& s) {
    return int(std::lower_bound(all.begin(), all.end(), s) - all.begin());
  };
  std::vector<int> count1(all.size(), 0), count2(all.size(), 0);
  Coloring n1(c1.size()), n2(c2.size());
  for (size_t v = 0; v < c1.size(); ++v) ++count1[n1[v] = id_of(s1[v])];
  for (size_t v = 0; v < c2.size(); ++v) ++count2[n2[v] = id_of(s2[v])];
  if (count1 != count2) return false;
  changed = (n1 != c1) || (n2 != c2);
  c1 = std::move(n1);
  c2 = std::move(n2);
  return true;
}

bool refine_pair(const Graph& g1, Coloring& c1, const Graph& g2,
                 Coloring& c2) {
  bool changed = true;
  while (changed) {
    changed = false;
    if (!refine_round_pair(g1, c1, g2, c2, changed)) return false;
  }
  return true;
}

// Single-graph refinement to a stable (equitable) coloring.
void refine_single(const Graph& g, Coloring& c) {
  bool changed = true;
  while (changed) {
    changed = false;
    auto s = signatures(g, c);
    std::vector<Signature> all = s;
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    Coloring nc(c.size());
    for (size_t v = 0; v < c.size(); ++v)
      nc[v] = int(std::lower_bound(all.begin(), all.end(), s[v]) - all.begin());
    if (nc != c) {
      changed = true;
      c = std::move(nc);
    }
  }
}

// Give vertex v a color above every existing one. Callers individualize the
// same old color on both sides, so the fresh ids still match up.
void individualize(Coloring& c, int v) {
  int m = color_count(c);
  c[v] = m;
}

// Cells of a coloring, keyed by color id.
std::map<int, std::vector<int>> cells_of(const Coloring& c) {
  std::map<int, std::vector<int>> cells;
  for (size_t v = 0; v < c.size(); ++v) cells[c[v]].push_back(int(v));
  return cells;
}

bool check_mapping(const Graph& g1, const Graph& g2,
                   const std::vector<int>& map) {
  const int n = g1.vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g1.adjacent(i, j) != g2.adjacent(map[i], map[j])) return false;
  return true;
}

// Backtracking search for a color-respecting isomorphism g1 -> g2.
bool search_iso(const Graph& g1, Coloring c1, const Graph& g2, Coloring c2,
                std::vector<int>& out) {
  if (!refine_pair(g1, c1, g2, c2)) return false;
  auto cell1 = cells_of(c1);
  auto cell2 = cells_of(c2);
  if (cell1.size() != cell2.size()) return false;

  // Pick the smallest non-singleton cell (fewest branches).
  int branch_color = -1;
  size_t best = SIZE_MAX;
  for (const auto& [col, verts] : cell1) {
    if (verts.size() > 1 && verts.size() < best) {
      best = verts.size();
      branch_color = col;
    }
    if (cell2.count(col) == 0 || cell2[col].size() != verts.size())
      return false;
  }
  if (branch_color < 0) {
    // Discrete: colors give the bijection directly.
    std::vector<int> map(c1.size());
    for (const auto& [col, verts] : cell1) map[verts[0]] = cell2[col][0];
    if (!check_mapping(g1, g2, map)) return false;
    out = std::move(map);
    return true;
  }
  int x = cell1[branch_color][0];
  for (int y : cell2[branch_color]) {
    Coloring d1 = c1, d2 = c2;
    individualize(d1, x);
    individualize(d2, y);
    if (search_iso(g1, std::move(d1), g2, std::move(d2), out)) return true;
  }
  return false;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  bool same(int a, int b) { return find(a) == find(b); }
};

// Finds one automorphism of g respecting `base` and mapping v -> u, or
// nothing. Discovered permutations feed the orbit union-find of the caller.
std::optional<std::vector<int>> find_auto(const Graph& g, const Coloring& base,
                                          int v, int u) {
  Coloring c1 = base, c2 = base;
  individualize(c1, v);
  individualize(c2, u);
  std::vector<int> map;
  if (search_iso(g, std::move(c1), g, std::move(c2), map)) return map;
  return std::nullopt;
}

BigInt aut_order_rec(const Graph& g, Coloring c) {
  refine_single(g, c);
  auto cells = cells_of(c);
  const std::vector<int>* target = nullptr;
  for (const auto& [col, verts] : cells)
    if (verts.size() > 1) {
      target = &verts;
      break;
    }
  if (!target) return 1;  // discrete: trivial group

  const int v = (*target)[0];
  Coloring cv = c;
  individualize(cv, v);
  BigInt stabilizer = aut_order_rec(g, std::move(cv));

  // Orbit of v inside its cell under the group respecting c.
  UnionFind uf(g.vertex_count());
  long long orbit = 1;
  for (size_t i = 1; i < target->size(); ++i) {
    int u = (*target)[i];
    if (uf.same(v, u)) {
      ++orbit;
      continue;
    }
    if (auto perm = find_auto(g, c, v, u)) {
      for (size_t a = 0; a < perm->size(); ++a) uf.unite(int(a), (*perm)[a]);
      ++orbit;
    }
  }
  return stabilizer * orbit;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g1,
                                                 const Graph& g2,
                                                 const IsoOptions& opt) {
  if (g1.vertex_count() != g2.vertex_count()) return std::nullopt;
  if (g1.vertex_count() > opt.max_vertices)
    throw BudgetError("find_isomorphism: vertex count exceeds budget");
  if (g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (g1.degree_sequence() != g2.degree_sequence()) return std::nullopt;
  Coloring c1(g1.vertex_count(), 0), c2(g2.vertex_count(), 0);
  std::vector<int> map;
  if (search_iso(g1, std::move(c1), g2, std::move(c2), map)) return map;
  return std::nullopt;
}

bool are_isomorphic(const Graph& g1, const Graph& g2, const IsoOptions& opt) {
  return find_isomorphism(g1, g2, opt).has_value();
}

BigInt aut_order(const Graph& g, const IsoOptions& opt) {
  if (g.vertex_count() > opt.max_vertices)
    throw BudgetError("aut_order: vertex count exceeds budget");
  if (g.vertex_count() == 0) return 1;
  return aut_order_rec(g, Coloring(g.vertex_count(), 0));
}

std::vector<std::vector<int>> vertex_orbits(const Graph& g,
                                            const IsoOptions& opt) {
  const int n = g.vertex_count();
  if (n > opt.max_vertices)
    throw BudgetError("vertex_orbits: vertex count exceeds budget");
  Coloring c(n, 0);
  refine_single(g, c);
  UnionFind uf(n);
  auto cells = cells_of(c);
  for (const auto& [col, verts] : cells) {
    for (size_t i = 1; i < verts.size(); ++i) {
      if (uf.same(verts[0], verts[i])) continue;
      if (auto perm = find_auto(g, Coloring(n, 0), verts[0], verts[i]))
        for (size_t a = 0; a < perm->size(); ++a) uf.unite(int(a), (*perm)[a]);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, verts] : groups) out.push_back(std::move(verts));
  return out;
}

}  // namespace pauligraph
