#include "pauligraph/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace pauligraph::nt {

int FactoredInteger::exponent_of(long long p) const {
  for (const auto& pp : factors)
    if (pp.prime == p) return pp.exponent;
  return 0;
}

FactoredInteger factorize(long long q) {
  if (q < 1) throw std::invalid_argument("factorize: q must be >= 1");
  FactoredInteger out;
  out.value = q;
  long long m = q;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    int s = 0;
    while (m % p == 0) {
      m /= p;
      ++s;
    }
    out.factors.push_back({p, s});
  }
  if (m > 1) out.factors.push_back({m, 1});
  return out;
}

long long divisor_sigma(long long q) {
  long long out = 1;
  for (const auto& [p, s] : factorize(q).factors) {
    long long term = 1, pk = 1;
    for (int i = 0; i < s; ++i) {
      pk *= p;
      term += pk;
    }
    out *= term;
  }
  return out;
}

long long dedekind_psi(long long q) {
  long long out = q;
  for (const auto& [p, s] : factorize(q).factors) {
    (void)s;
    out = out / p * (p + 1);
  }
  return out;
}

long long euler_phi(long long q) {
  long long out = q;
  for (const auto& [p, s] : factorize(q).factors) {
    (void)s;
    out = out / p * (p - 1);
  }
  return out;
}

long long jordan_j2(long long q) {
  long long out = q * q;
  for (const auto& [p, s] : factorize(q).factors) {
    (void)s;
    out = out / (p * p) * (p * p - 1);
  }
  return out;
}

long long sp2_order(long long q) { return q * jordan_j2(q); }

int p_valuation(long long p, long long x, long long q) {
  const int cap = factorize(q).exponent_of(p);
  if (cap == 0) throw std::invalid_argument("p_valuation: p does not divide q");
  if (x < 0 || x >= q)
    throw std::invalid_argument("p_valuation: x out of range [0,q)");
  if (x == 0) return cap;
  int t = 0;
  while (x % p == 0) {
    x /= p;
    ++t;
  }
  return t;
}

long long local_dimension(long long q, long long b, long long c) {
  if (b == 0 && c == 0)
    throw std::invalid_argument("local_dimension: zero vector");
  long long out = 1;
  for (const auto& [p, s] : factorize(q).factors) {
    int t = std::min(std::min(p_valuation(p, b, q), p_valuation(p, c, q)), s);
    for (int i = 0; i < t; ++i) out *= p;
  }
  return out;
}

HyperbolicCounts hyperbolic_counts(long long p, int n) {
  if (n < 1) throw std::invalid_argument("hyperbolic_counts: n must be >= 1");
  BigInt pn = 1, pn1 = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  for (int i = 0; i < n - 1; ++i) pn1 *= p;
  HyperbolicCounts out;
  out.points = (pn - 1) * (pn1 + 1) / (p - 1);
  out.generators = 1;
  BigInt pw = 1;  // p^{i-1}
  for (int i = 1; i <= n; ++i) {
    out.generators *= (1 + pw);
    pw *= p;
  }
  return out;
}

}  // namespace pauligraph::nt
