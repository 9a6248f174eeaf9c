#include "pauligraph/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "pauligraph/errors.hpp"

namespace pauligraph {

int Spectrum::total_degree() const {
  int t = residual_degree;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

std::string Spectrum::display() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& e : entries) {
    if (!first) os << ",";
    first = false;
    os << e.value << "^" << e.multiplicity;
  }
  if (residual_degree > 0) {
    if (!first) os << ",";
    os << "residual^" << residual_degree;
  }
  os << "}";
  return os.str();
}

Spectrum Spectrum::from_entries(std::vector<std::pair<long long, int>> e,
                                int residual) {
  Spectrum s;
  for (auto [v, m] : e) s.entries.push_back({v, m});
  std::sort(s.entries.begin(), s.entries.end(),
            [](const Entry& a, const Entry& b) { return a.value > b.value; });
  s.residual_degree = residual;
  return s;
}

int rank_bareiss(std::vector<std::vector<BigInt>>& m) {
  const int rows = int(m.size());
  if (rows == 0) return 0;
  const int cols = int(m[0].size());
  std::vector<int> rperm(rows), cperm(cols);
  for (int i = 0; i < rows; ++i) rperm[i] = i;
  for (int j = 0; j < cols; ++j) cperm[j] = j;

  const auto abs_less = [](const BigInt& a, const BigInt& b) {
    return mpz_cmpabs(a.backend().data(), b.backend().data()) < 0;
  };

  BigInt prev = 1;
  int r = 0;
  while (r < rows && r < cols) {
    // Full pivoting; prefer the smallest-magnitude nonzero entry to damp
    // the growth of the exact minors.
    int pi = -1, pj = -1;
    for (int i = r; i < rows; ++i)
      for (int j = r; j < cols; ++j) {
        const BigInt& v = m[rperm[i]][cperm[j]];
        if (v == 0) continue;
        if (pi < 0 || abs_less(v, m[rperm[pi]][cperm[pj]])) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(rperm[r], rperm[pi]);
    std::swap(cperm[r], cperm[pj]);
    const BigInt& pivot = m[rperm[r]][cperm[r]];
    for (int i = r + 1; i < rows; ++i) {
      BigInt& lead = m[rperm[i]][cperm[r]];
      for (int j = r + 1; j < cols; ++j) {
        BigInt& x = m[rperm[i]][cperm[j]];
        x = (pivot * x - lead * m[rperm[r]][cperm[j]]) / prev;
      }
      lead = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

int adjacency_rank_shifted(const Graph& g, long long shift) {
  const int n = g.vertex_count();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = g.row(i).first(); j >= 0; j = g.row(i).next(j)) m[i][j] = 1;
    m[i][i] -= shift;
  }
  return rank_bareiss(m);
}

Spectrum spectrum(const Graph& g, const SpectrumOptions& opt) {
  const int n = g.vertex_count();
  if (n > opt.max_vertices)
    throw BudgetError("spectrum: vertex count exceeds budget");
  Spectrum out;
  if (n == 0) return out;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = g.row(i).first(); j >= 0; j = g.row(i).next(j)) a(i, j) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw VerificationError("spectrum: numeric eigensolve failed");

  // Integer candidates proposed by the numeric solve.
  std::map<long long, int> hint;
  for (int i = 0; i < n; ++i) {
    double ev = solver.eigenvalues()(i);
    long long z = llround(ev);
    if (std::abs(ev - double(z)) <= opt.cluster_tolerance) ++hint[z];
  }

  // Certification: the exact rank decides the multiplicity. A hint whose
  // certified multiplicity is zero was a near-integer numeric artifact and
  // falls into the residual.
  int certified = 0;
  for (auto it = hint.rbegin(); it != hint.rend(); ++it) {
    long long lambda = it->first;
    int mult = n - adjacency_rank_shifted(g, lambda);
    if (mult > 0) {
      out.entries.push_back({lambda, mult});
      certified += mult;
    }
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const Spectrum::Entry& x, const Spectrum::Entry& y) {
              return x.value > y.value;
            });
  out.residual_degree = n - certified;

  // Moment identities: trace and edge count must be consistent.
  long long sum = 0, sumsq = 0;
  for (const auto& e : out.entries) {
    sum += e.value * e.multiplicity;
    sumsq += e.value * e.value * e.multiplicity;
  }
  if (out.residual_degree == 0) {
    if (sum != 0 || sumsq != 2 * g.edge_count())
      throw VerificationError("spectrum: moment check failed");
  } else if (sumsq > 2 * g.edge_count()) {
    throw VerificationError("spectrum: second moment exceeds edge bound");
  }
  return out;
}

}  // namespace pauligraph
