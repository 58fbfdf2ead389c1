#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "graph.hpp"
#include "realreg/analysis.hpp"
#include "realreg/error.hpp"

namespace realreg {

namespace {

constexpr std::size_t kExactBlockLimit = 12;
constexpr std::size_t kSubsetLimit = 200'000;

using Matrix = std::vector<std::vector<long>>;
using Poly = std::vector<Rational>;  // coefficient i multiplies x^i

/// Characteristic polynomial det(xI − A) by Faddeev–LeVerrier.
std::vector<BigInt> characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A·M_{k−1} + c_{n−k+1}·I
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < n; ++l)
          if (a[i][l] != 0) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    m = std::move(next);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (a[i][l] != 0) trace += a[i][l] * m[l][i];
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

Rational evaluate(const Poly& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

void strip(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly remainder(Poly a, const Poly& b) {
  strip(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    strip(a);
  }
  return a;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p};
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
  strip(d);
  if (d.empty()) return seq;
  seq.push_back(d);
  while (true) {
    Poly r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_changes(const std::vector<Poly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    const int s = evaluate(p, x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Largest real root of a monic integer polynomial lying in [0, upper].
double largest_root(const std::vector<BigInt>& coefficients, long upper) {
  Poly p;
  for (const auto& c : coefficients) p.emplace_back(c);
  const auto seq = sturm_sequence(p);
  Rational lo = 0, hi = upper;
  if (evaluate(p, hi).is_zero()) return static_cast<double>(upper);
  // Invariant: the largest root lies in (lo, hi].
  if (sign_changes(seq, lo) - sign_changes(seq, hi) == 0) return 0.0;
  const Rational tolerance(BigInt(1), BigInt(1) << 48);
  while (hi - lo > tolerance) {
    const Rational mid = (lo + hi) / Rational(2);
    if (sign_changes(seq, mid) - sign_changes(seq, hi) > 0) lo = mid;
    else hi = mid;
  }
  return ((lo + hi) / Rational(2)).to_double();
}

/// Collatz–Wielandt bounds on A + I, which is primitive for irreducible A.
double collatz_wielandt(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<double> v(n, 1.0), w(n);
  double lo = 0, hi = 0;
  for (int iter = 0; iter < 1'000'000; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = v[i];
      for (std::size_t j = 0; j < n; ++j) s += static_cast<double>(a[i][j]) * v[j];
      w[i] = s;
    }
    lo = INFINITY;
    hi = 0;
    double top = 0;
    for (std::size_t i = 0; i < n; ++i) {
      lo = std::min(lo, w[i] / v[i]);
      hi = std::max(hi, w[i] / v[i]);
      top = std::max(top, w[i]);
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / top;
    if (hi - lo < 1e-11 * hi) break;
  }
  return (lo + hi) / 2 - 1;
}

/// det(A − kI) = 0, by fraction-free elimination.
bool is_eigenvalue(const Matrix& a, long k) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j] - (i == j ? k : 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return true;
    std::swap(m[pivot], m[col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      const Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return false;
}

struct BlockRadius {
  double value = 0;
  Matrix block;
};

std::vector<BlockRadius> block_radii(const Matrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<std::vector<std::uint32_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (matrix[i][j] != 0) succ[i].push_back(static_cast<std::uint32_t>(j));
  const auto scc = detail::strongly_connected_components(succ);
  std::vector<std::vector<std::size_t>> members(scc.count);
  for (std::size_t i = 0; i < n; ++i) members[scc.component[i]].push_back(i);

  std::vector<BlockRadius> out;
  for (std::uint32_t c = 0; c < scc.count; ++c) {
    if (!scc.nontrivial[c]) continue;
    const auto& idx = members[c];
    BlockRadius b;
    b.block.assign(idx.size(), std::vector<long>(idx.size(), 0));
    long row_max = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      long row = 0;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        b.block[i][j] = matrix[idx[i]][idx[j]];
        row += b.block[i][j];
      }
      row_max = std::max(row_max, row);
    }
    b.value = idx.size() <= kExactBlockLimit ? largest_root(characteristic_polynomial(b.block), row_max)
                                             : collatz_wielandt(b.block);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

double spectral_radius(const std::vector<std::vector<long>>& matrix) {
  double best = 0;
  for (const auto& b : block_radii(matrix)) best = std::max(best, b.value);
  return best;
}

Dimension hausdorff_dim(const BuchiAutomaton& a) {
  if (a.arity() != 1) fail(ErrorKind::ArityError, "dimension needs an arity-1 automaton; project first");
  if (!is_closed(a)) fail(ErrorKind::NotClosed, "dimension needs a trim automaton with every state accepting");

  // Deterministic prefix graph: subsets of states reachable by a common prefix.
  std::map<std::vector<State>, std::size_t> index;
  std::vector<std::vector<State>> subsets;
  std::vector<std::map<std::size_t, long>> edges;
  auto intern = [&](std::vector<State> s) {
    auto [it, inserted] = index.emplace(s, subsets.size());
    if (inserted) {
      if (subsets.size() >= kSubsetLimit) fail(ErrorKind::ResourceLimit, "subset construction exceeded the limit");
      subsets.push_back(std::move(s));
      edges.emplace_back();
    }
    return it->second;
  };
  std::vector<State> start = a.initial();
  std::sort(start.begin(), start.end());
  intern(start);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Letter c = 0; c < a.alphabet().size(); ++c) {
      std::vector<State> next;
      for (State q : subsets[i])
        for (const auto& e : a.out(q))
          if (e.label == c) next.push_back(e.to);
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      const std::size_t j = intern(std::move(next));
      ++edges[i][j];
    }
  }
  Matrix matrix(subsets.size(), std::vector<long>(subsets.size(), 0));
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (const auto& [j, count] : edges[i]) matrix[i][j] = count;

  Dimension d;
  d.base = a.base();
  const auto blocks = block_radii(matrix);
  const BlockRadius* best = nullptr;
  for (const auto& b : blocks)
    if (!best || b.value > best->value) best = &b;
  d.spectral_radius = best ? best->value : 0.0;

  const long rounded = std::lround(d.spectral_radius);
  if (best && rounded >= 1 && std::abs(d.spectral_radius - static_cast<double>(rounded)) < 1e-6 &&
      is_eigenvalue(best->block, rounded)) {
    d.integer_radius = rounded;
    d.spectral_radius = static_cast<double>(rounded);
  }
  if (d.integer_radius == 1) d.value = 0.0;
  else if (d.integer_radius == d.base) d.value = 1.0;
  else d.value = std::log(d.spectral_radius) / std::log(static_cast<double>(d.base));
  d.value = std::clamp(d.value, 0.0, 1.0);
  return d;
}

std::string Dimension::str() const {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12f", value);
  std::string out = buffer;
  if (integer_radius)
    out += " = log(" + std::to_string(*integer_radius) + ")/log(" + std::to_string(base) + ")";
  return out;
}

}  // namespace realreg
