#include "pauligraph/polar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pauligraph/errors.hpp"
#include "pauligraph/numtheory.hpp"
#include "pauligraph/pauli.hpp"

namespace pauligraph::polar {

namespace {

std::vector<int> observable_vector(const Observable& o) {
  std::vector<int> v;
  v.reserve(o.exponents.size() * 2);
  for (auto [b, c] : o.exponents) {
    v.push_back(b);
    v.push_back(c);
  }
  return v;
}

std::vector<int> normalize(std::vector<int> v, long long p) {
  int lead = -1;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) {
      lead = int(i);
      break;
    }
  if (lead < 0) throw std::invalid_argument("normalize: zero vector");
  // Inverse of the leading coordinate mod p, by scan (p is small).
  int inv = 1;
  for (int x = 1; x < p; ++x)
    if (v[lead] * x % p == 1) {
      inv = x;
      break;
    }
  for (auto& x : v) x = int((long long)x * inv % p);
  return v;
}

int alternating_form(const std::vector<int>& a, const std::vector<int>& b,
                     long long p) {
  long long acc = 0;
  for (size_t i = 0; i + 1 < a.size(); i += 2)
    acc += (long long)a[i + 1] * b[i] - (long long)b[i + 1] * a[i];
  return int((acc % p + p) % p);
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PolarSpace polar_space(long long p, int n, long long vertex_budget,
                       long long clique_budget) {
  if (!is_prime(p)) throw std::invalid_argument("polar_space: p not prime");
  if (n < 1) throw std::invalid_argument("polar_space: n < 1");

  const Factorization f = Factorization::of(std::vector<int>(n, int(p)));
  Graph pauli = build_pauli_graph(f, vertex_budget);  // also enforces budget
  auto obs = observables(f);

  PolarSpace ps;
  ps.p = p;
  ps.n = n;
  std::map<std::vector<int>, int> point_index;
  std::vector<int> class_of(obs.size());
  for (size_t i = 0; i < obs.size(); ++i) {
    auto v = normalize(observable_vector(obs[i]), p);
    auto it = point_index.find(v);
    if (it == point_index.end()) {
      it = point_index.emplace(v, int(ps.points.size())).first;
      ps.points.push_back(v);
    }
    class_of[i] = it->second;
  }

  long long p_odd = 1;  // p^{2n-1}
  for (int i = 0; i < 2 * n - 1; ++i) p_odd *= p;
  if ((long long)ps.points.size() != nt::divisor_sigma(p_odd))
    throw VerificationError("polar_space: point count differs from census");

  const int m = int(ps.points.size());
  ps.collinearity = Graph(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (alternating_form(ps.points[i], ps.points[j], p) == 0)
        ps.collinearity.add_edge(i, j);

  // Cross-check the form route against the commutation route under the
  // canonical class bijection: distinct classes are collinear exactly when
  // their representatives commute.
  for (size_t i = 0; i < obs.size(); ++i)
    for (size_t j = i + 1; j < obs.size(); ++j) {
      bool comm = pauli.adjacent(int(i), int(j));
      bool coll = class_of[i] == class_of[j] ||
                  ps.collinearity.adjacent(class_of[i], class_of[j]);
      if (comm != coll)
        throw VerificationError(
            "polar_space: commutation and collinearity disagree");
    }

  ps.generators = maximal_cliques(ps.collinearity, clique_budget);
  long long expected_gens = 1, pw = 1;
  for (int i = 1; i <= n; ++i) {
    pw *= p;
    expected_gens *= (1 + pw);
  }
  if ((long long)ps.generators.size() != expected_gens)
    throw VerificationError("polar_space: generator count differs from census");
  const long long gen_size = (pw - 1) / (p - 1);
  for (const auto& [size, count] : ps.generators.by_size) {
    (void)count;
    if (size != gen_size)
      throw VerificationError("polar_space: generator of unexpected size");
  }
  return ps;
}

Spread find_spread(const PolarSpace& ps) {
  const int m = ps.generators.size();
  const int npts = ps.collinearity.vertex_count();
  // Generators containing each point, for first-uncovered branching.
  std::vector<std::vector<int>> through(npts);
  for (int g = 0; g < m; ++g)
    for (int v : ps.generators.cliques[g]) through[v].push_back(g);

  Bitset covered(npts);
  std::vector<int> chosen;
  std::vector<int> best;

  auto rec = [&](auto&& self) -> bool {
    int v = -1;
    for (int i = 0; i < npts; ++i)
      if (!covered.test(i)) {
        v = i;
        break;
      }
    if (v < 0) {
      best = chosen;
      return true;
    }
    for (int g : through[v]) {
      if (ps.generators.members[g].intersects(covered)) continue;
      Bitset saved = covered;
      covered |= ps.generators.members[g];
      chosen.push_back(g);
      if (self(self)) return true;
      chosen.pop_back();
      covered = std::move(saved);
    }
    return false;
  };
  if (!rec(rec))
    throw VerificationError("find_spread: exhausted without a spread");
  return Spread{best};
}

PuncturedSpace puncture(const PolarSpace& ps, int base_point) {
  const int npts = ps.collinearity.vertex_count();
  if (base_point < 0 || base_point >= npts)
    throw std::invalid_argument("puncture: base point out of range");

  PuncturedSpace out;
  out.base_point = base_point;

  // Isotropic 2-spaces through the base point, enumerated as the distinct
  // spans of the base with each collinear point.
  std::set<std::vector<int>> spans;
  const auto& u = ps.points[base_point];
  const auto& row = ps.collinearity.row(base_point);
  for (int v = row.first(); v >= 0; v = row.next(v)) {
    const auto& w = ps.points[v];
    std::set<std::vector<int>> span_pts;
    for (int a = 0; a < ps.p; ++a)
      for (int b = 0; b < ps.p; ++b) {
        if (a == 0 && b == 0) continue;
        std::vector<int> x(u.size());
        for (size_t i = 0; i < u.size(); ++i)
          x[i] = int(((long long)a * u[i] + (long long)b * w[i]) % ps.p);
        span_pts.insert(normalize(x, ps.p));
      }
    std::vector<int> flat;
    for (const auto& s : span_pts)
      flat.insert(flat.end(), s.begin(), s.end());
    spans.insert(flat);
  }
  out.lines_through_base = (long long)spans.size();
  out.surviving_points = npts - out.lines_through_base;

  for (int g = 0; g < ps.generators.size(); ++g) {
    if (ps.generators.members[g].test(base_point))
      out.removed_generators.push_back(g);
    else
      out.surviving_generators.push_back(g);
  }
  CliqueFamily survivors = ps.generators.subfamily(out.surviving_generators);
  out.dual = disjointness_graph(survivors);
  std::vector<std::string> labels;
  for (int g : out.surviving_generators) labels.push_back(std::to_string(g));
  out.dual.set_labels(std::move(labels));
  return out;
}

std::pair<CliqueFamily, Graph> puncture_family(const CliqueFamily& cf,
                                               int vertex) {
  std::vector<int> keep;
  for (int i = 0; i < cf.size(); ++i)
    if (!cf.members[i].test(vertex)) keep.push_back(i);
  CliqueFamily sub = cf.subfamily(keep);
  Graph dual = disjointness_graph(sub);
  std::vector<std::string> labels;
  for (int i : keep) labels.push_back(std::to_string(i));
  dual.set_labels(std::move(labels));
  return {std::move(sub), std::move(dual)};
}

}  // namespace pauligraph::polar
