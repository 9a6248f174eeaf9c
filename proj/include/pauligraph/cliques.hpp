#pragma once

#include <map>
#include <set>
#include <vector>

#include "pauligraph/graph.hpp"

namespace pauligraph {

// All maximal cliques of a graph, in a fixed deterministic order
// (lexicographic on sorted vertex lists). Membership is kept both as
// bitsets (for intersection queries) and vertex lists.
struct CliqueFamily {
  int vertex_count = 0;
  std::vector<Bitset> members;
  std::vector<std::vector<int>> cliques;
  std::map<int, long long> by_size;

  int size() const { return int(cliques.size()); }
  int intersection_size(int a, int b) const {
    return members[a].count_and(members[b]);
  }
  bool disjoint(int a, int b) const {
    return !members[a].intersects(members[b]);
  }
  // Subfamily restricted to the cliques listed in `which` (indices kept
  // in the given order).
  CliqueFamily subfamily(const std::vector<int>& which) const;
  // Cliques of exactly this member count.
  std::vector<int> indices_of_size(int k) const;
};

// Pivoting branch-and-bound enumeration of every maximal clique.
// Refuses (all-or-nothing) once more than `clique_budget` cliques appear.
CliqueFamily maximal_cliques(const Graph& g, long long clique_budget = 10'000'000);

// Graph on the cliques of the family: edge iff the two cliques share no
// vertex. Labels are family indices.
Graph disjointness_graph(const CliqueFamily& cf);

// Graph on the cliques: edge iff the two cliques share exactly k vertices.
Graph k_intersection_graph(const CliqueFamily& cf, int k);

// Set of realized pairwise intersection sizes over distinct clique pairs.
std::set<int> intersection_profile(const CliqueFamily& cf);

}  // namespace pauligraph
