#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pauligraph/bigint.hpp"

namespace pauligraph::nt {

struct PrimePower {
  long long prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

// Canonical prime factorization: value = prod p_i^{s_i}, primes strictly
// increasing, exponents >= 1. value = 1 has an empty factor list.
struct FactoredInteger {
  long long value = 1;
  std::vector<PrimePower> factors;

  // Exponent of p in value, 0 if p does not divide it.
  int exponent_of(long long p) const;
};

// Deterministic trial division up to sqrt(q). Rejects q < 1.
FactoredInteger factorize(long long q);

// Sum of all positive divisors, computed multiplicatively.
long long divisor_sigma(long long q);

// Dedekind psi: q * prod_{p|q} (1 + 1/p). psi(1) = 1.
long long dedekind_psi(long long q);

// Euler totient: number of units of Z_q.
long long euler_phi(long long q);

// Jordan totient J_2: q^2 * prod_{p|q} (1 - 1/p^2). Counts pairs
// (b,c) in Z_q^2 with gcd(b,c,q) = 1.
long long jordan_j2(long long q);

// Order of the group of 2x2 matrices over Z_q with determinant 1,
// which is q * J_2(q).
long long sp2_order(long long q);

// Valuation of the residue x in Z_q at the prime p (p must divide q).
// For x != 0 this is the exact p-adic valuation of the integer x.
// For x = 0 the valuation is capped at the exponent of p in q, since in
// the ring Z_q zero is divisible by every power of p present.
int p_valuation(long long p, long long x, long long q);

// Largest divisor d of q such that d divides both b and c, written as
// prod p^{t_p} with t_p = min over the two coordinates of the (capped)
// p-valuations. Governs how many isotropic lines pass through (b,c).
// Rejects the zero vector.
long long local_dimension(long long q, long long b, long long c);

// Point and generator counts of the hyperbolic orthogonal space of rank n
// over F_p: points (p^n-1)(p^{n-1}+1)/(p-1), generators prod (1+p^{i-1}).
struct HyperbolicCounts {
  BigInt points;
  BigInt generators;
};
HyperbolicCounts hyperbolic_counts(long long p, int n);

}  // namespace pauligraph::nt
