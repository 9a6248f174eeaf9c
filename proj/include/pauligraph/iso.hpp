#pragma once

#include <optional>
#include <vector>

#include "pauligraph/bigint.hpp"
#include "pauligraph/graph.hpp"

namespace pauligraph {

struct IsoOptions {
  int max_vertices = 150;  // refinement-search budget
};

// Exact isomorphism test by color refinement plus backtracking. On success
// the returned mapping sends vertices of g1 to vertices of g2 and has been
// verified edge-by-edge before being returned.
std::optional<std::vector<int>> find_isomorphism(const Graph& g1,
                                                 const Graph& g2,
                                                 const IsoOptions& opt = {});

bool are_isomorphic(const Graph& g1, const Graph& g2,
                    const IsoOptions& opt = {});

// |Aut(g)| by iterated orbit-stabilizer: the order is the product over the
// stabilizer chain of the orbit size of the first branching vertex, with
// orbit membership witnessed by explicit automorphisms.
BigInt aut_order(const Graph& g, const IsoOptions& opt = {});

// Orbits of the vertex set under the full automorphism group.
std::vector<std::vector<int>> vertex_orbits(const Graph& g,
                                            const IsoOptions& opt = {});

}  // namespace pauligraph
