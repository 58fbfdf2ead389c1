#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "graph.hpp"
#include "realreg/analysis.hpp"
#include "realreg/error.hpp"

namespace realreg {

namespace {

struct PairEdge {
  Letter first;
  Letter second;
  std::uint32_t to;
};

// BFS inside one component of the pair graph; returns the label pairs along
// a shortest path from `from` to `to`.
std::vector<std::pair<Letter, Letter>> pair_path(const std::vector<std::vector<PairEdge>>& edges,
                                                 const detail::SccResult& scc, std::uint32_t from,
                                                 std::uint32_t to) {
  if (from == to) return {};
  const auto component = scc.component[from];
  std::map<std::uint32_t, std::pair<std::uint32_t, std::size_t>> parent;
  std::deque<std::uint32_t> queue{from};
  parent.emplace(from, std::make_pair(from, 0));
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < edges[v].size(); ++k) {
      const auto w = edges[v][k].to;
      if (scc.component[w] != component || parent.count(w)) continue;
      parent.emplace(w, std::make_pair(v, k));
      if (w == to) {
        std::vector<std::pair<Letter, Letter>> path;
        for (auto x = to; x != from;) {
          const auto [prev, idx] = parent.at(x);
          path.emplace_back(edges[prev][idx].first, edges[prev][idx].second);
          x = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  fail(ErrorKind::Domain, "pair graph nodes are not strongly connected");
}

}  // namespace

std::optional<NonSparseWitness> find_nonsparse_witness(const BuchiAutomaton& a) {
  const std::size_t n = a.state_count();
  std::vector<std::vector<PairEdge>> edges(n * n);
  std::vector<std::vector<std::uint32_t>> succ(n * n);
  for (State p = 0; p < n; ++p) {
    for (State q = 0; q < n; ++q) {
      const auto node = static_cast<std::uint32_t>(p * n + q);
      for (const auto& e1 : a.out(p))
        for (const auto& e2 : a.out(q)) {
          const auto to = static_cast<std::uint32_t>(e1.to * n + e2.to);
          edges[node].push_back({e1.label, e2.label, to});
          succ[node].push_back(to);
        }
      std::sort(edges[node].begin(), edges[node].end(), [](const PairEdge& x, const PairEdge& y) {
        return std::tie(x.first, x.second, x.to) < std::tie(y.first, y.second, y.to);
      });
    }
  }
  const auto scc = detail::strongly_connected_components(succ);
  std::vector<std::vector<std::uint32_t>> members(scc.count);
  for (std::uint32_t v = 0; v < n * n; ++v) members[scc.component[v]].push_back(v);

  for (State q = 0; q < n; ++q) {
    const auto diagonal = static_cast<std::uint32_t>(q * n + q);
    const auto component = scc.component[diagonal];
    if (!scc.nontrivial[component]) continue;
    for (auto x : members[component]) {
      for (const auto& e : edges[x]) {
        if (e.first == e.second || scc.component[e.to] != component) continue;
        auto path = pair_path(edges, scc, diagonal, x);
        path.emplace_back(e.first, e.second);
        const auto back = pair_path(edges, scc, e.to, diagonal);
        path.insert(path.end(), back.begin(), back.end());
        NonSparseWitness w{q, {}, {}};
        for (const auto& [l1, l2] : path) {
          w.first.push_back(l1);
          w.second.push_back(l2);
        }
        return w;
      }
    }
  }
  return std::nullopt;
}

std::string SparsityVerdict::str() const {
  if (sparse) return "SPARSE";
  std::string out = "NONSPARSE";
  if (witness && trimmed) {
    auto word = [&](const Word& w) {
      std::string s = trimmed->alphabet().word_to_string(w);
      std::replace(s.begin(), s.end(), ' ', ';');
      return s;
    };
    out += " q=" + std::to_string(witness->state) + " a=" + word(witness->first) + " b=" + word(witness->second);
  }
  return out;
}

SparsityVerdict classify_sparsity(const BuchiAutomaton& input, std::size_t chain_cap) {
  SparsityVerdict verdict;
  verdict.trimmed = is_trim(input) ? input : trim(input);
  verdict.witness = find_nonsparse_witness(*verdict.trimmed);
  verdict.sparse = !verdict.witness;
  if (verdict.sparse) verdict.normal_form = sparse_normal_form(*verdict.trimmed, chain_cap);
  return verdict;
}

namespace {

double log_of(const BigInt& x) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double residual = 0.0;
};

LineFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  LineFit fit;
  const double denom = n * sxx - sx * sx;
  fit.slope = denom == 0 ? 0 : (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - fit.intercept - fit.slope * xs[i];
    fit.residual += r * r;
  }
  return fit;
}

}  // namespace

GrowthReport growth_oracle(const BuchiAutomaton& input, std::size_t n_max) {
  if (n_max < 8) fail(ErrorKind::Domain, "growth oracle needs n_max >= 8");
  const BuchiAutomaton a = is_trim(input) ? input : trim(input);
  GrowthReport report;
  report.counts = prefix_counts(a, n_max);

  std::vector<double> ns, logn, ys;
  for (std::size_t n = n_max / 2; n <= n_max; ++n) {
    ns.push_back(static_cast<double>(n));
    logn.push_back(std::log(static_cast<double>(n) + 1.0));
    ys.push_back(log_of(report.counts[n]));
  }
  const LineFit exponential = least_squares(ns, ys);
  const LineFit polynomial = least_squares(logn, ys);
  report.ratio = std::exp(exponential.slope);
  report.degree = polynomial.slope;
  report.exp_residual = exponential.residual;
  report.poly_residual = polynomial.residual;
  report.growth = exponential.residual < polynomial.residual && report.ratio > 1.05 ? Growth::Exponential
                                                                                     : Growth::Polynomial;
  return report;
}

}  // namespace realreg
