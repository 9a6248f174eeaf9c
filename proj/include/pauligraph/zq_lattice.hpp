#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pauligraph/cliques.hpp"
#include "pauligraph/graph.hpp"

namespace pauligraph::zq {

// Point of the lattice Z_q^2.
struct LatticeVector {
  long long b = 0;
  long long c = 0;
  auto operator<=>(const LatticeVector&) const = default;
};

// Maximal set of mutually perpendicular nonzero vectors (the zero vector is
// implicit). Free lines are cyclic: some member generates the whole line as
// its set of nonzero multiples.
struct IsotropicLine {
  std::vector<LatticeVector> points;  // sorted, q-1 of them
  bool free = false;
  std::optional<LatticeVector> generator;
};

// Symplectic product b'c - bc' == 0 mod q.
bool is_perpendicular(long long q, const LatticeVector& v1,
                      const LatticeVector& v2);

// Graph on the q^2 - 1 nonzero vectors in lexicographic (b,c) order,
// edge iff perpendicular.
Graph perpendicularity_graph(long long q, long long vertex_budget = 10000);

// Index of a nonzero vector in the lexicographic vertex order above.
int vector_index(long long q, const LatticeVector& v);
LatticeVector vector_at(long long q, int index);

// All isotropic lines, as the size-(q-1) maximal cliques of the
// perpendicularity graph, each tagged free/non-free after the fact.
// Exactly sigma(q) of them.
std::vector<IsotropicLine> isotropic_lines(long long q,
                                           long long vertex_budget = 10000);

// All (b,c) with gcd(b,c,q) = 1; cardinality J_2(q).
std::vector<LatticeVector> admissible_vectors(long long q);

// Distinct free cyclic submodules spanned by admissible vectors, as sorted
// sets of their nonzero points; cardinality psi(q).
std::vector<std::vector<LatticeVector>> projective_line(long long q);

// Number of isotropic lines through x, by enumeration. Equals
// sigma(local_dimension(q, x)). Rejects the zero vector.
long long lines_through(long long q, const LatticeVector& x);

// Number of free cyclic submodules (projective-line points) containing x,
// by enumeration, paired with the formula value psi(local_dimension(q,x)).
// The two disagree at non-admissible points; both are reported and nothing
// is asserted here.
struct SubmoduleCensus {
  long long enumerated;
  long long formula;
};
SubmoduleCensus submodules_through(long long q, const LatticeVector& x);

// Perfect matching between the size-(q-1) maximal cliques of the single-qudit
// Pauli graph and the isotropic lines, via the observable -> (b,c) coordinate
// map. Entry i is the line index of clique i. Throws VerificationError if any
// clique lacks a line image or the matching is not a bijection.
std::vector<int> clique_line_bijection(long long q,
                                       long long vertex_budget = 10000);

}  // namespace pauligraph::zq
