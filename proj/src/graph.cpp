#include "pauligraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace pauligraph {

bool Bitset::any() const {
  for (uint64_t x : w_)
    if (x) return true;
  return false;
}

int Bitset::count() const {
  int c = 0;
  for (uint64_t x : w_) c += std::popcount(x);
  return c;
}

int Bitset::first() const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
  return -1;
}

int Bitset::next(int after) const {
  int i = after + 1;
  if (i >= nbits_) return -1;
  size_t wi = i >> 6;
  uint64_t cur = w_[wi] & (~uint64_t(0) << (i & 63));
  while (true) {
    if (cur) return int(wi * 64 + std::countr_zero(cur));
    if (++wi >= w_.size()) return -1;
    cur = w_[wi];
  }
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bitset Bitset::operator&(const Bitset& o) const {
  Bitset r(*this);
  r &= o;
  return r;
}

Bitset Bitset::and_not(const Bitset& o) const {
  Bitset r(*this);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
  return r;
}

int Bitset::count_and(const Bitset& o) const {
  int c = 0;
  for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
  return c;
}

bool Bitset::intersects(const Bitset& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

std::vector<int> Bitset::to_vector() const {
  std::vector<int> out;
  for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
  return out;
}

Bitset Bitset::from_vector(int nbits, const std::vector<int>& bits) {
  Bitset b(nbits);
  for (int i : bits) b.set(i);
  return b;
}

Graph::Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int i, int j) {
  if (i == j) throw std::invalid_argument("add_edge: self-loop");
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("add_edge: vertex out of range");
  adj_[i].set(j);
  adj_[j].set(i);
}

long long Graph::edge_count() const {
  long long d = 0;
  for (int i = 0; i < n_; ++i) d += degree(i);
  return d / 2;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (int(labels.size()) != n_)
    throw std::invalid_argument("set_labels: size mismatch");
  labels_ = std::move(labels);
}

std::string Graph::label(int i) const {
  if (labels_.empty()) return std::to_string(i);
  return labels_[i];
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!adjacent(i, j)) g.add_edge(i, j);
  g.labels_ = labels_;
  return g;
}

std::vector<std::vector<int>> Graph::connected_components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    int id = int(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int u = adj_[v].first(); u >= 0; u = adj_[v].next(u))
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph g(int(vertices.size()));
  for (size_t a = 0; a < vertices.size(); ++a)
    for (size_t b = a + 1; b < vertices.size(); ++b)
      if (adjacent(vertices[a], vertices[b])) g.add_edge(int(a), int(b));
  std::vector<std::string> lab(vertices.size());
  for (size_t a = 0; a < vertices.size(); ++a) lab[a] = label(vertices[a]);
  g.labels_ = std::move(lab);
  return g;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int i = 0; i < n_; ++i) d[i] = degree(i);
  std::sort(d.begin(), d.end());
  return d;
}

std::optional<SrgParams> strongly_regular_params(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  const int k = g.degree(0);
  for (int i = 1; i < n; ++i)
    if (g.degree(i) != k) return std::nullopt;
  int lambda = -1, mu = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int common = g.row(i).count_and(g.row(j));
      if (g.adjacent(i, j)) {
        if (lambda < 0)
          lambda = common;
        else if (lambda != common)
          return std::nullopt;
      } else {
        if (mu < 0)
          mu = common;
        else if (mu != common)
          return std::nullopt;
      }
    }
  if (lambda < 0 || mu < 0) return std::nullopt;  // complete or empty
  return SrgParams{n, k, lambda, mu};
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int i = 0; i < g.vertex_count(); ++i)
    os << "  v" << i << " [label=\"" << g.label(i) << "\"];\n";
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j)) os << "  v" << i << " -- v" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << "\n";
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j)) os << i << " " << j << "\n";
  return os.str();
}

Graph read_edge_list(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1;
  bool dimacs = false;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'n') {
      char tag;
      ls >> tag >> n;
      continue;
    }
    if (line[0] == 'p') {
      std::string tag, kind;
      ls >> tag >> kind >> n;
      dimacs = true;
      continue;
    }
    int u, v;
    if (line[0] == 'e') {
      char tag;
      ls >> tag >> u >> v;
      edges.emplace_back(u - 1, v - 1);  // DIMACS is 1-based
    } else if (ls >> u >> v) {
      edges.emplace_back(u, v);
    }
  }
  (void)dimacs;
  if (n < 0) {
    for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
    if (n < 0) n = 0;
  }
  Graph g(n);
  for (auto [u, v] : edges)
    if (!g.adjacent(u, v)) g.add_edge(u, v);
  return g;
}

}  // namespace pauligraph
