#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "pauligraph/numtheory.hpp"

using namespace pauligraph;
using namespace pauligraph::nt;

namespace {

// Independent oracles: plain divisor scans and gcd counts, no shared code
// with the implementation.

long long sigma_oracle(long long q) {
  long long s = 0;
  for (long long d = 1; d <= q; ++d)
    if (q % d == 0) s += d;
  return s;
}

bool squarefree(long long d) {
  for (long long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

long long psi_oracle(long long q) {
  long long s = 0;
  for (long long d = 1; d <= q; ++d)
    if (q % d == 0 && squarefree(d)) s += q / d;
  return s;
}

long long phi_oracle(long long q) {
  long long s = 0;
  for (long long k = 1; k <= q; ++k)
    if (std::gcd(k, q) == 1) ++s;
  return s;
}

long long j2_gcd_oracle(long long q) {
  long long s = 0;
  for (long long b = 0; b < q; ++b)
    for (long long c = 0; c < q; ++c)
      if (std::gcd(std::gcd(b, c), q) == 1) ++s;
  return s;
}

long long mobius(long long d) {
  long long m = 1;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    d /= p;
    if (d % p == 0) return 0;
    m = -m;
  }
  if (d > 1) m = -m;
  return m;
}

long long j2_mobius_oracle(long long q) {
  long long s = 0;
  for (long long d = 1; d <= q; ++d)
    if (q % d == 0) s += mobius(d) * (q / d) * (q / d);
  return s;
}

long long sp2_oracle(long long q) {
  long long s = 0;
  for (long long a = 0; a < q; ++a)
    for (long long b = 0; b < q; ++b)
      for (long long c = 0; c < q; ++c)
        for (long long d = 0; d < q; ++d)
          if (((a * d - b * c) % q + q) % q == 1 % q) ++s;
  return s;
}

}  // namespace

TEST_CASE("factorize") {
  auto f12 = factorize(12);
  CHECK(f12.value == 12);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0] == PrimePower{2, 2});
  CHECK(f12.factors[1] == PrimePower{3, 1});
  CHECK(factorize(1).factors.empty());
  auto f24 = factorize(24);
  REQUIRE(f24.factors.size() == 2);
  CHECK(f24.factors[0] == PrimePower{2, 3});
  CHECK(f24.factors[1] == PrimePower{3, 1});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);

  for (long long q = 1; q <= 2000; ++q) {
    long long prod = 1;
    long long last = 1;
    for (auto [p, s] : factorize(q).factors) {
      CHECK(p > last);
      last = p;
      for (int i = 0; i < s; ++i) prod *= p;
    }
    CHECK(prod == q);
  }
}

TEST_CASE("sigma, psi, phi, J2 examples") {
  CHECK(divisor_sigma(4) == 7);
  CHECK(divisor_sigma(1) == 1);
  CHECK(divisor_sigma(18) == 39);
  CHECK(dedekind_psi(4) == 6);
  CHECK(dedekind_psi(18) == 36);
  CHECK(dedekind_psi(6) == 12);  // squarefree: equals sigma(6)
  CHECK(dedekind_psi(6) == divisor_sigma(6));
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(jordan_j2(4) == 12);
  CHECK(jordan_j2(1) == 1);
  CHECK(jordan_j2(12) == 96);
}

TEST_CASE("single-qudit census values") {
  CHECK(divisor_sigma(8) == 15);
  CHECK(divisor_sigma(9) == 13);
  CHECK(divisor_sigma(12) == 28);  // not 27: 1+2+3+4+6+12
  CHECK(divisor_sigma(16) == 31);
  CHECK(dedekind_psi(8) == 12);
  CHECK(dedekind_psi(9) == 12);
  CHECK(dedekind_psi(12) == 24);
  CHECK(dedekind_psi(16) == 24);
}

TEST_CASE("oracle agreement up to 1000") {
  for (long long q = 1; q <= 1000; ++q) {
    CHECK(divisor_sigma(q) == sigma_oracle(q));
    CHECK(dedekind_psi(q) == psi_oracle(q));
    CHECK(euler_phi(q) == phi_oracle(q));
    CHECK(jordan_j2(q) == j2_mobius_oracle(q));
  }
  for (long long q = 1; q <= 200; ++q) CHECK(jordan_j2(q) == j2_gcd_oracle(q));
}

TEST_CASE("multiplicativity and psi/sigma comparison") {
  for (long long a = 2; a * 2 <= 10000; ++a)
    for (long long b = a + 1; a * b <= 10000; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(divisor_sigma(a * b) == divisor_sigma(a) * divisor_sigma(b));
      CHECK(dedekind_psi(a * b) == dedekind_psi(a) * dedekind_psi(b));
      CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
      CHECK(jordan_j2(a * b) == jordan_j2(a) * jordan_j2(b));
    }
  for (long long q = 1; q <= 10000; ++q) {
    CHECK(dedekind_psi(q) <= divisor_sigma(q));
    CHECK((dedekind_psi(q) == divisor_sigma(q)) == squarefree(q));
    CHECK(jordan_j2(q) == euler_phi(q) * dedekind_psi(q));
  }
}

TEST_CASE("sp2_order") {
  CHECK(sp2_order(4) == 48);
  CHECK(sp2_order(2) == 6);
  CHECK(sp2_order(1) == 1);
  for (long long q = 1; q <= 30; ++q) CHECK(sp2_order(q) == sp2_oracle(q));
}

TEST_CASE("p_valuation") {
  CHECK(p_valuation(2, 12, 24) == 2);
  CHECK(p_valuation(3, 1, 9) == 0);
  CHECK(p_valuation(2, 0, 4) == 2);  // capped at the exponent in q
  CHECK_THROWS_AS(p_valuation(5, 1, 12), std::invalid_argument);
}

TEST_CASE("local_dimension") {
  CHECK(local_dimension(4, 1, 1) == 1);
  CHECK(local_dimension(4, 0, 2) == 2);
  CHECK(local_dimension(12, 6, 6) == 6);
  CHECK_THROWS_AS(local_dimension(4, 0, 0), std::invalid_argument);
  // Valuation product equals the gcd content of the vector in the ring.
  for (long long q = 2; q <= 40; ++q)
    for (long long b = 0; b < q; ++b)
      for (long long c = 0; c < q; ++c) {
        if (b == 0 && c == 0) continue;
        CHECK(local_dimension(q, b, c) == std::gcd(std::gcd(b, c), q));
      }
}

TEST_CASE("hyperbolic counts") {
  auto h24 = hyperbolic_counts(2, 4);
  CHECK(h24.points == 135);
  CHECK(h24.generators == 270);  // (1+1)(1+2)(1+4)(1+8)
  auto h21 = hyperbolic_counts(2, 1);
  CHECK(h21.points == 2);  // (2-1)(2^0+1)/(2-1), formula exactly as stated
  auto h34 = hyperbolic_counts(3, 4);
  CHECK(h34.points == 1120);  // equals the rank-3 generator count over F_3
}
