#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pauligraph {

// Fixed-width bitset sized at construction. Rows of the adjacency matrix;
// also used for clique membership and candidate sets during enumeration.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool any() const;
  int count() const;
  int first() const;           // lowest set bit, -1 if none
  int next(int after) const;   // lowest set bit > after, -1 if none

  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  Bitset operator&(const Bitset& o) const;
  Bitset and_not(const Bitset& o) const;  // this & ~o
  int count_and(const Bitset& o) const;   // popcount(this & o)
  bool intersects(const Bitset& o) const;
  bool is_subset_of(const Bitset& o) const;
  bool operator==(const Bitset& o) const = default;

  std::vector<int> to_vector() const;
  static Bitset from_vector(int nbits, const std::vector<int>& bits);

 private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

// Simple undirected graph: symmetric bitset adjacency, zero diagonal,
// immutable after construction. Labels carry external identity (observable
// names, clique indices) through induced subgraphs and exports.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const;
  bool adjacent(int i, int j) const { return adj_[i].test(j); }
  int degree(int i) const { return adj_[i].count(); }
  const Bitset& row(int i) const { return adj_[i]; }

  void add_edge(int i, int j);  // construction only

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(int i) const;

  Graph complement() const;
  std::vector<std::vector<int>> connected_components() const;
  // Vertex-induced subgraph; original labels preserved.
  Graph induced(const std::vector<int>& vertices) const;
  std::vector<int> degree_sequence() const;  // sorted ascending

 private:
  int n_ = 0;
  std::vector<Bitset> adj_;
  std::vector<std::string> labels_;
};

struct SrgParams {
  int n, k, lambda, mu;
  bool operator==(const SrgParams&) const = default;
};

// Parameters (n,k,lambda,mu) if the graph is strongly regular; nullopt for
// irregular graphs and for the degenerate complete/empty cases where mu or
// lambda is undefined.
std::optional<SrgParams> strongly_regular_params(const Graph& g);

// DOT serialization (vertex labels become node labels when present).
std::string to_dot(const Graph& g, const std::string& name = "g");

// Edge-list serialization: first line "n <N>", then one "u v" line per edge.
std::string to_edge_list(const Graph& g);
// Accepts the format above plus '#' comments and DIMACS-style
// "p edge n m" / "e u v" lines (1-based vertices in DIMACS mode).
Graph read_edge_list(const std::string& text);

}  // namespace pauligraph
