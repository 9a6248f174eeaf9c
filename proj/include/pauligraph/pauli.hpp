#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "pauligraph/graph.hpp"

namespace pauligraph {

// Ordered tensor decomposition of the Hilbert space dimension. Factor order
// is preserved: "3x4" and "4x3" describe the same system up to relabeling
// but keep their own labels.
struct Factorization {
  std::vector<int> factors;  // each >= 2
  long long dimension = 1;   // product
  long long lcm = 1;

  static Factorization of(std::vector<int> factors);
  // Grammar: integers >= 2 joined by 'x' (case-insensitive), e.g. "2x2x3".
  static Factorization parse(const std::string& text);
  std::string display() const;  // "2x2x3"
  bool operator==(const Factorization&) const = default;
};

// One observable of the Pauli group modulo its center: per factor the
// exponent pair (b_i, c_i) of the shift and clock operators, not all zero.
// The global phase is deliberately not represented.
struct Observable {
  std::vector<std::pair<int, int>> exponents;  // (b_i, c_i), 0 <= * < d_i
  bool operator==(const Observable&) const = default;
  auto operator<=>(const Observable&) const = default;
};

// All q^2 - 1 observables in canonical order. The order is lexicographic on
// the per-factor (c_i, b_i) keys, which puts the bare shift operator of the
// last factor first (IX before IZ for two qubits); every downstream
// "first point" choice refers to this order.
std::vector<Observable> observables(const Factorization& f);

// c_i * b'_i - c'_i * b_i mod d_i for factor i.
int symplectic_delta(const Observable& o1, const Observable& o2,
                     const Factorization& f, int factor_index);

// The commutator phase of two observables is the product over factors of
// d_i-th roots of unity with exponents delta_i; they commute iff
// sum_i delta_i * (L / d_i) == 0 mod L with L = lcm of the factors.
bool commutes(const Observable& o1, const Observable& o2,
              const Factorization& f);

// Exact q x q generalized permutation matrix: each column s holds a single
// root-of-unity entry exp(2*pi*i*phase[s]/phase_mod) at row row_of[s].
// Tensor products and products of shift/clock powers stay in this form, so
// the commutation oracle is exact integer bookkeeping at every dimension.
struct MonomialMatrix {
  int dim = 0;
  long long phase_mod = 1;
  std::vector<int> row_of;
  std::vector<long long> phase;

  static MonomialMatrix identity(int dim, long long phase_mod);
  // Matrix of X^b Z^c in dimension d with phases tracked mod phase_mod
  // (d must divide phase_mod).
  static MonomialMatrix shift_clock(int d, int b, int c, long long phase_mod);
  static MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b);
  MonomialMatrix operator*(const MonomialMatrix& o) const;
  bool operator==(const MonomialMatrix& o) const = default;
  std::vector<std::vector<std::complex<double>>> dense() const;
};

// Dense-matrix route for desk-scale verification of `commutes`.
// Rejected above the cap.
MonomialMatrix matrix_oracle(const Observable& o, const Factorization& f,
                             long long oracle_cap = 16);

// Names like "X", "Z2X3", "IX.XZ" (factors joined by '.'). Qubit factors
// use the I/X/Y/Z letters with Y for the XZ class.
std::string observable_name(const Observable& o, const Factorization& f);

// Simple undirected graph on the q^2 - 1 observables in canonical order,
// edge iff the observables commute. Labels are observable names.
Graph build_pauli_graph(const Factorization& f, long long vertex_budget = 10000);

// For pairwise coprime factors the system identifies with a single q-dit;
// this is the witnessing vertex bijection from the Pauli graph of f to the
// Pauli graph of [q] (both in canonical order).
std::vector<int> crt_vertex_map(const Factorization& f);

}  // namespace pauligraph
