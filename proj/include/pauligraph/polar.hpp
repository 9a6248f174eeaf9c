#pragma once

#include <utility>
#include <vector>

#include "pauligraph/cliques.hpp"
#include "pauligraph/graph.hpp"

namespace pauligraph::polar {

// Symplectic polar space of order p (prime) and rank n: the projective
// points of F_p^{2n} with collinearity given by the vanishing alternating
// form sum_i (c_i b'_i - c'_i b_i). Point order follows the canonical
// observable order of the n-fold p-dit system, so point 0 is the class of
// the first observable. Generators (maximal totally isotropic subspaces)
// are the maximal cliques of the collinearity graph.
struct PolarSpace {
  long long p = 2;
  int n = 1;
  // Point representatives: interleaved exponents (b_1, c_1, ..., b_n, c_n),
  // normalized so the first nonzero coordinate is 1.
  std::vector<std::vector<int>> points;
  Graph collinearity;
  CliqueFamily generators;
};

// Builds the space two ways and cross-checks them: directly from the
// alternating form, and from the commutation relation of the n-fold p-dit
// observables under the canonical class bijection. Point and generator
// counts are verified against the closed-form census.
PolarSpace polar_space(long long p, int n, long long vertex_budget = 10000,
                       long long clique_budget = 10'000'000);

// p^n + 1 pairwise-disjoint generators partitioning the points, found by
// exact-cover backtracking. Throws VerificationError on exhaustion.
struct Spread {
  std::vector<int> generator_indices;
};
Spread find_spread(const PolarSpace& ps);

// Removal of a perp-set: the base point u and every generator through it.
// The surviving point census is |points| minus the number of isotropic
// 2-spaces through u (enumerated); the dual graph joins disjoint surviving
// generators and its labels are the original generator indices.
struct PuncturedSpace {
  int base_point = 0;
  long long lines_through_base = 0;
  long long surviving_points = 0;
  std::vector<int> removed_generators;
  std::vector<int> surviving_generators;
  Graph dual;
};
PuncturedSpace puncture(const PolarSpace& ps, int base_point = 0);

// Same removal applied to an arbitrary clique family: drop every clique
// containing the vertex, return the surviving subfamily and its
// disjointness graph.
std::pair<CliqueFamily, Graph> puncture_family(const CliqueFamily& cf,
                                               int vertex);

}  // namespace pauligraph::polar
