#pragma once

#include <string>
#include <vector>

#include "pauligraph/bigint.hpp"
#include "pauligraph/graph.hpp"

namespace pauligraph {

// Verified integer eigenvalues of an adjacency matrix. A numeric eigensolve
// only proposes candidates; every (value, multiplicity) entry carries an
// exact rank certificate rank(A - value*I) = n - multiplicity obtained by
// fraction-free elimination over the integers. Numeric mass that fails to
// certify as an integer eigenvalue is reported in residual_degree, never
// rounded in.
struct Spectrum {
  struct Entry {
    long long value;
    int multiplicity;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> entries;  // sorted by value, descending
  int residual_degree = 0;

  int total_degree() const;
  bool operator==(const Spectrum&) const = default;
  // "{6^1,1^9,-3^5}" display form.
  std::string display() const;
  static Spectrum from_entries(std::vector<std::pair<long long, int>> e,
                               int residual = 0);
};

struct SpectrumOptions {
  int max_vertices = 2000;
  double cluster_tolerance = 1e-6;
};

Spectrum spectrum(const Graph& g, const SpectrumOptions& opt = {});

// Exact rank of an integer matrix by fraction-free (Bareiss) elimination
// with full pivoting. The matrix is consumed.
int rank_bareiss(std::vector<std::vector<BigInt>>& m);

// Exact rank of (A - shift*I) for the adjacency matrix of g.
int adjacency_rank_shifted(const Graph& g, long long shift);

}  // namespace pauligraph
