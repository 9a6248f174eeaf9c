#include "pauligraph/zq_lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pauligraph/errors.hpp"
#include "pauligraph/numtheory.hpp"
#include "pauligraph/pauli.hpp"

namespace pauligraph::zq {

bool is_perpendicular(long long q, const LatticeVector& v1,
                      const LatticeVector& v2) {
  return ((v1.b * v2.c - v1.c * v2.b) % q + q) % q == 0;
}

int vector_index(long long q, const LatticeVector& v) {
  if (v.b == 0 && v.c == 0)
    throw std::invalid_argument("vector_index: zero vector");
  return int(v.b * q + v.c - 1);
}

LatticeVector vector_at(long long q, int index) {
  long long flat = index + 1;
  return {flat / q, flat % q};
}

Graph perpendicularity_graph(long long q, long long vertex_budget) {
  if (q < 2) throw std::invalid_argument("perpendicularity_graph: q < 2");
  const long long n = q * q - 1;
  if (n > vertex_budget)
    throw BudgetError("perpendicularity_graph: vertex budget exceeded");
  Graph g(static_cast<int>(n));
  for (int i = 0; i < int(n); ++i)
    for (int j = i + 1; j < int(n); ++j)
      if (is_perpendicular(q, vector_at(q, i), vector_at(q, j)))
        g.add_edge(i, j);
  return g;
}

namespace {

// Nonzero multiples of v, sorted; also reports whether u -> u*v is injective
// over Z_q (q distinct multiples).
std::pair<std::vector<LatticeVector>, bool> multiples(long long q,
                                                      const LatticeVector& v) {
  std::set<LatticeVector> pts;
  for (long long u = 0; u < q; ++u)
    pts.insert({u * v.b % q, u * v.c % q});
  bool injective = (long long)pts.size() == q;
  std::vector<LatticeVector> nz;
  for (const auto& p : pts)
    if (p.b || p.c) nz.push_back(p);
  return {nz, injective};
}

}  // namespace

std::vector<IsotropicLine> isotropic_lines(long long q,
                                           long long vertex_budget) {
  Graph g = perpendicularity_graph(q, vertex_budget);
  CliqueFamily cf = maximal_cliques(g);
  std::vector<IsotropicLine> out;
  for (const auto& clique : cf.cliques) {
    if ((long long)clique.size() != q - 1) continue;
    IsotropicLine line;
    for (int v : clique) line.points.push_back(vector_at(q, v));
    std::sort(line.points.begin(), line.points.end());
    for (const auto& p : line.points) {
      auto [mult, injective] = multiples(q, p);
      if (injective && mult == line.points) {
        line.free = true;
        line.generator = p;
        break;
      }
    }
    out.push_back(std::move(line));
  }
  if ((long long)out.size() != nt::divisor_sigma(q))
    throw VerificationError("isotropic_lines: count differs from sigma(q)");
  return out;
}

std::vector<LatticeVector> admissible_vectors(long long q) {
  if (q < 2) throw std::invalid_argument("admissible_vectors: q < 2");
  std::vector<LatticeVector> out;
  for (long long b = 0; b < q; ++b)
    for (long long c = 0; c < q; ++c)
      if (std::gcd(std::gcd(b, c), q) == 1) out.push_back({b, c});
  return out;
}

std::vector<std::vector<LatticeVector>> projective_line(long long q) {
  std::set<std::vector<LatticeVector>> seen;
  for (const auto& v : admissible_vectors(q)) {
    auto [pts, injective] = multiples(q, v);
    (void)injective;
    seen.insert(pts);
  }
  return {seen.begin(), seen.end()};
}

long long lines_through(long long q, const LatticeVector& x) {
  if (x.b == 0 && x.c == 0)
    throw std::invalid_argument("lines_through: zero vector");
  long long n = 0;
  for (const auto& line : isotropic_lines(q))
    if (std::binary_search(line.points.begin(), line.points.end(), x)) ++n;
  return n;
}

SubmoduleCensus submodules_through(long long q, const LatticeVector& x) {
  if (x.b == 0 && x.c == 0)
    throw std::invalid_argument("submodules_through: zero vector");
  long long n = 0;
  for (const auto& sub : projective_line(q))
    if (std::binary_search(sub.begin(), sub.end(), x)) ++n;
  return {n, nt::dedekind_psi(nt::local_dimension(q, x.b, x.c))};
}

std::vector<int> clique_line_bijection(long long q, long long vertex_budget) {
  const Factorization f = Factorization::of({int(q)});
  Graph pauli = build_pauli_graph(f, vertex_budget);
  CliqueFamily cf = maximal_cliques(pauli);
  auto obs = observables(f);
  auto lines = isotropic_lines(q, vertex_budget);

  std::map<std::vector<LatticeVector>, int> line_index;
  for (int i = 0; i < int(lines.size()); ++i)
    line_index[lines[i].points] = i;

  std::vector<int> match;
  std::vector<bool> used(lines.size(), false);
  for (const auto& clique : cf.cliques) {
    if ((long long)clique.size() != q - 1) continue;
    std::vector<LatticeVector> pts;
    for (int v : clique)
      pts.push_back({obs[v].exponents[0].first, obs[v].exponents[0].second});
    std::sort(pts.begin(), pts.end());
    auto it = line_index.find(pts);
    if (it == line_index.end())
      throw VerificationError(
          "clique_line_bijection: clique without a line image at q=" +
          std::to_string(q));
    if (used[it->second])
      throw VerificationError("clique_line_bijection: line matched twice");
    used[it->second] = true;
    match.push_back(it->second);
  }
  if (match.size() != lines.size())
    throw VerificationError("clique_line_bijection: not a bijection");
  return match;
}

}  // namespace pauligraph::zq
