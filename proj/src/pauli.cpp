#include "pauligraph/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pauligraph/errors.hpp"

namespace pauligraph {

Factorization Factorization::of(std::vector<int> factors) {
  if (factors.empty())
    throw std::invalid_argument("Factorization: no factors");
  Factorization f;
  f.factors = std::move(factors);
  for (int d : f.factors) {
    if (d < 2) throw std::invalid_argument("Factorization: factor < 2");
    f.dimension *= d;
    f.lcm = std::lcm(f.lcm, (long long)d);
  }
  return f;
}

Factorization Factorization::parse(const std::string& text) {
  std::vector<int> factors;
  std::string cur;
  auto flush = [&] {
    if (cur.empty())
      throw std::invalid_argument("Factorization: empty factor in '" + text +
                                  "'");
    factors.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == 'x' || ch == 'X')
      flush();
    else if (ch >= '0' && ch <= '9')
      cur.push_back(ch);
    else
      throw std::invalid_argument("Factorization: bad character in '" + text +
                                  "'");
  }
  flush();
  return of(std::move(factors));
}

std::string Factorization::display() const {
  std::ostringstream os;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) os << "x";
    os << factors[i];
  }
  return os.str();
}

namespace {

// Canonical sort key: per factor (c_i, b_i), flattened.
std::vector<int> order_key(const Observable& o) {
  std::vector<int> key;
  key.reserve(o.exponents.size() * 2);
  for (auto [b, c] : o.exponents) {
    key.push_back(c);
    key.push_back(b);
  }
  return key;
}

void check_compatible(const Observable& o, const Factorization& f) {
  if (o.exponents.size() != f.factors.size())
    throw std::invalid_argument("observable does not match factorization");
  for (size_t i = 0; i < f.factors.size(); ++i) {
    auto [b, c] = o.exponents[i];
    if (b < 0 || c < 0 || b >= f.factors[i] || c >= f.factors[i])
      throw std::invalid_argument("observable exponent out of range");
  }
}

}  // namespace

std::vector<Observable> observables(const Factorization& f) {
  const size_t k = f.factors.size();
  std::vector<Observable> out;
  out.reserve(size_t(f.dimension * f.dimension - 1));
  Observable cur;
  cur.exponents.assign(k, {0, 0});
  // Odometer over the (c_i, b_i) key, most significant factor first.
  while (true) {
    bool zero = true;
    for (auto [b, c] : cur.exponents)
      if (b || c) zero = false;
    if (!zero) out.push_back(cur);
    int i = int(k) - 1;
    for (; i >= 0; --i) {
      auto& [b, c] = cur.exponents[i];
      if (++b < f.factors[i]) break;
      b = 0;
      if (++c < f.factors[i]) break;
      c = 0;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end(), [](const Observable& a, const Observable& b) {
    return order_key(a) < order_key(b);
  });
  return out;
}

int symplectic_delta(const Observable& o1, const Observable& o2,
                     const Factorization& f, int factor_index) {
  check_compatible(o1, f);
  check_compatible(o2, f);
  const int d = f.factors[factor_index];
  auto [b, c] = o1.exponents[factor_index];
  auto [bp, cp] = o2.exponents[factor_index];
  int delta = int(((long long)c * bp - (long long)cp * b) % d);
  return delta < 0 ? delta + d : delta;
}

bool commutes(const Observable& o1, const Observable& o2,
              const Factorization& f) {
  check_compatible(o1, f);
  check_compatible(o2, f);
  long long acc = 0;
  for (size_t i = 0; i < f.factors.size(); ++i) {
    int delta = symplectic_delta(o1, o2, f, int(i));
    acc = (acc + delta * (f.lcm / f.factors[i])) % f.lcm;
  }
  return acc == 0;
}

MonomialMatrix MonomialMatrix::identity(int dim, long long phase_mod) {
  MonomialMatrix m;
  m.dim = dim;
  m.phase_mod = phase_mod;
  m.row_of.resize(dim);
  std::iota(m.row_of.begin(), m.row_of.end(), 0);
  m.phase.assign(dim, 0);
  return m;
}

MonomialMatrix MonomialMatrix::shift_clock(int d, int b, int c,
                                           long long phase_mod) {
  if (phase_mod % d)
    throw std::invalid_argument("shift_clock: d must divide phase_mod");
  // X^b Z^c maps |s> to omega_d^{c s} |s+b>.
  MonomialMatrix m;
  m.dim = d;
  m.phase_mod = phase_mod;
  m.row_of.resize(d);
  m.phase.resize(d);
  const long long unit = phase_mod / d;
  for (int s = 0; s < d; ++s) {
    m.row_of[s] = (s + b) % d;
    m.phase[s] = (long long)c % d * s % d * unit % phase_mod;
  }
  return m;
}

MonomialMatrix MonomialMatrix::kron(const MonomialMatrix& a,
                                    const MonomialMatrix& b) {
  if (a.phase_mod != b.phase_mod)
    throw std::invalid_argument("kron: phase moduli differ");
  MonomialMatrix m;
  m.dim = a.dim * b.dim;
  m.phase_mod = a.phase_mod;
  m.row_of.resize(m.dim);
  m.phase.resize(m.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) {
      int col = i * b.dim + j;
      m.row_of[col] = a.row_of[i] * b.dim + b.row_of[j];
      m.phase[col] = (a.phase[i] + b.phase[j]) % m.phase_mod;
    }
  return m;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
  if (dim != o.dim || phase_mod != o.phase_mod)
    throw std::invalid_argument("MonomialMatrix: shape mismatch");
  MonomialMatrix m;
  m.dim = dim;
  m.phase_mod = phase_mod;
  m.row_of.resize(dim);
  m.phase.resize(dim);
  for (int s = 0; s < dim; ++s) {
    int mid = o.row_of[s];
    m.row_of[s] = row_of[mid];
    m.phase[s] = (o.phase[s] + phase[mid]) % phase_mod;
  }
  return m;
}

std::vector<std::vector<std::complex<double>>> MonomialMatrix::dense() const {
  std::vector<std::vector<std::complex<double>>> out(
      dim, std::vector<std::complex<double>>(dim, 0.0));
  const double tau = 2.0 * std::acos(-1.0);
  for (int s = 0; s < dim; ++s)
    out[row_of[s]][s] =
        std::polar(1.0, tau * double(phase[s]) / double(phase_mod));
  return out;
}

MonomialMatrix matrix_oracle(const Observable& o, const Factorization& f,
                             long long oracle_cap) {
  check_compatible(o, f);
  if (f.dimension > oracle_cap)
    throw BudgetError("matrix_oracle: dimension exceeds oracle cap");
  MonomialMatrix m = MonomialMatrix::identity(1, f.lcm);
  for (size_t i = 0; i < f.factors.size(); ++i) {
    auto [b, c] = o.exponents[i];
    m = MonomialMatrix::kron(
        m, MonomialMatrix::shift_clock(f.factors[i], b, c, f.lcm));
  }
  return m;
}

std::string observable_name(const Observable& o, const Factorization& f) {
  check_compatible(o, f);
  std::ostringstream os;
  for (size_t i = 0; i < f.factors.size(); ++i) {
    if (i) os << ".";
    auto [b, c] = o.exponents[i];
    if (f.factors[i] == 2) {
      os << (b == 0 && c == 0 ? "I" : b == 1 && c == 0 ? "X"
                                  : b == 0 && c == 1   ? "Z"
                                                       : "Y");
      continue;
    }
    if (b == 0 && c == 0) {
      os << "I";
      continue;
    }
    if (b > 0) os << "X" << (b > 1 ? std::to_string(b) : "");
    if (c > 0) os << "Z" << (c > 1 ? std::to_string(c) : "");
  }
  return os.str();
}

Graph build_pauli_graph(const Factorization& f, long long vertex_budget) {
  const long long n = f.dimension * f.dimension - 1;
  if (n > vertex_budget)
    throw BudgetError("build_pauli_graph: vertex budget exceeded for q=" +
                      std::to_string(f.dimension));
  auto obs = observables(f);
  Graph g(static_cast<int>(n));
  for (int i = 0; i < int(n); ++i)
    for (int j = i + 1; j < int(n); ++j)
      if (commutes(obs[i], obs[j], f)) g.add_edge(i, j);
  std::vector<std::string> labels(n);
  for (int i = 0; i < int(n); ++i) labels[i] = observable_name(obs[i], f);
  g.set_labels(std::move(labels));
  return g;
}

std::vector<int> crt_vertex_map(const Factorization& f) {
  for (size_t i = 0; i < f.factors.size(); ++i)
    for (size_t j = i + 1; j < f.factors.size(); ++j)
      if (std::gcd(f.factors[i], f.factors[j]) != 1)
        throw std::invalid_argument("crt_vertex_map: factors not coprime");
  const Factorization single = Factorization::of({int(f.dimension)});
  auto from = observables(f);
  auto to = observables(single);
  std::map<Observable, int> index;
  for (int i = 0; i < int(to.size()); ++i) index[to[i]] = i;
  std::vector<int> map(from.size());
  for (size_t i = 0; i < from.size(); ++i) {
    // Residue map: the q-dit exponent pair reduces per factor.
    long long b = -1, c = -1;
    // Solve b = b_i mod d_i, c = c_i mod d_i by search over Z_q (q small).
    for (long long cand = 0; cand < f.dimension && (b < 0 || c < 0); ++cand) {
      bool okb = true, okc = true;
      for (size_t k = 0; k < f.factors.size(); ++k) {
        if (cand % f.factors[k] != from[i].exponents[k].first) okb = false;
        if (cand % f.factors[k] != from[i].exponents[k].second) okc = false;
      }
      if (okb && b < 0) b = cand;
      if (okc && c < 0) c = cand;
    }
    Observable target;
    target.exponents = {{int(b), int(c)}};
    map[i] = index.at(target);
  }
  return map;
}

}  // namespace pauligraph
