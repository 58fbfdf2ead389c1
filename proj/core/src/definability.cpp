#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "realreg/analysis.hpp"
#include "realreg/error.hpp"

namespace realreg {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

/// r = s^k with k maximal.
std::pair<long, long> reduce_base(long r) {
  for (long k = 63; k >= 2; --k) {
    const long s = std::lround(std::pow(static_cast<double>(r), 1.0 / static_cast<double>(k)));
    for (long c = std::max(2L, s - 1); c <= s + 1; ++c) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(k));
      if (p == r) return {c, k};
    }
  }
  return {r, 1};
}

}  // namespace

bool EventuallyPeriodicSet::contains(std::size_t n) const {
  if (n < threshold) return head[n];
  return residues[(n - threshold) % period];
}

std::size_t EventuallyPeriodicSet::minimal_period() const {
  for (std::size_t p = 1; p < period; ++p) {
    if (period % p != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < period && ok; ++i) ok = residues[i] == residues[(i + p) % period];
    if (ok) return p;
  }
  return period;
}

bool EventuallyPeriodicSet::infinite() const {
  return std::find(residues.begin(), residues.end(), true) != residues.end();
}

std::string EventuallyPeriodicSet::str() const {
  std::vector<std::string> early, classes;
  for (std::size_t n = 0; n < threshold; ++n)
    if (head[n]) early.push_back(std::to_string(n));
  for (std::size_t i = 0; i < period; ++i)
    if (residues[i]) classes.push_back(std::to_string((threshold + i) % period));
  std::sort(classes.begin(), classes.end(), [](const std::string& a, const std::string& b) {
    return std::stoul(a) < std::stoul(b);
  });
  std::string out = "{" + join(early, ",") + "}";
  return out + " ∪ {n ≥ " + std::to_string(threshold) + " : n mod " + std::to_string(period) + " ∈ {" +
         join(classes, ",") + "}}";
}

ScaleWitness extract_scale(const ExpSumDescription& input) {
  if (input.arity != 1) fail(ErrorKind::NotUnary, "scale extraction needs a unary description");
  const ExpSumDescription e = canonicalize(input);
  ScaleWitness w;
  ScaleTrace& t = w.trace;

  // (i) Differentiate until the accumulation set is finite.
  ExpSumDescription current = e;
  ExpSumDescription accumulation = cb_derivative(current);
  if (accumulation.empty()) fail(ErrorKind::FiniteSet, "description denotes a finite set");
  t.derivative_steps = 1;
  while (accumulation.max_depth() > 1) {
    current = accumulation;
    accumulation = cb_derivative(current);
    ++t.derivative_steps;
  }

  // (ii) Smallest accumulation point and the sequences converging to it.
  t.accumulation_point = accumulation.chains.front().coefficients[0][0];
  for (const auto& c : accumulation.chains) t.accumulation_point = std::min(t.accumulation_point, c.coefficients[0][0]);
  std::vector<std::pair<Rational, long>> terms;
  for (const auto& c : current.chains)
    if (c.depth() == 2 && c.coefficients[0][0] == t.accumulation_point)
      terms.emplace_back(c.coefficients[1][0], c.steps[0]);
  t.reflected = std::all_of(terms.begin(), terms.end(), [](const auto& p) { return p.first.sign() < 0; });
  std::vector<std::pair<Rational, long>> kept;
  for (const auto& [c, d] : terms) {
    const Rational v = t.reflected ? -c : c;
    if (v.sign() > 0) kept.emplace_back(v, d);
  }
  BigInt scale = 1;
  for (const auto& [c, d] : kept) scale = lcm(scale, c.denominator());
  t.scale = Rational(scale);

  const auto [s, k] = reduce_base(input.base);
  t.reduced_base = s;
  t.base_exponent = k;
  for (const auto& [c, d] : kept) {
    t.multipliers.push_back((c * t.scale).numerator());
    t.steps.push_back(d * k);
  }

  // (iii) T = {t ≥ 1 : b_i s^{−t} ∈ ∪_j b_j s^{−δ_j ℕ} for every i}.
  const std::size_t m = t.multipliers.size();
  std::vector<std::vector<std::optional<long>>> gap(m, std::vector<std::optional<long>>(m));
  long threshold = 1;
  std::size_t period = 1;
  for (std::size_t j = 0; j < m; ++j) period = std::lcm(period, static_cast<std::size_t>(t.steps[j]));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      long exponent = 0;
      if (power_of(Rational(t.multipliers[i], t.multipliers[j]), s, &exponent)) {
        gap[i][j] = exponent;
        threshold = std::max(threshold, exponent);
      }
    }
  auto in_t = [&](long n) {
    if (n < 1) return false;
    for (std::size_t i = 0; i < m; ++i) {
      bool hit = false;
      for (std::size_t j = 0; j < m && !hit; ++j)
        hit = gap[i][j] && n >= *gap[i][j] && (n - *gap[i][j]) % t.steps[j] == 0;
      if (!hit) return false;
    }
    return true;
  };
  t.exponents.threshold = static_cast<std::size_t>(threshold);
  t.exponents.period = period;
  for (long n = 0; n < threshold; ++n) t.exponents.head.push_back(in_t(n));
  for (std::size_t i = 0; i < period; ++i) t.exponents.residues.push_back(in_t(threshold + static_cast<long>(i)));

  // B ⊆ s^ℤ unless some non-power ratio permutes the classes of the b_i mod s^ℤ.
  auto same_class = [&](const Rational& q) {
    long ignored = 0;
    return power_of(q, s, &ignored);
  };
  t.b_within_powers = true;
  for (std::size_t j = 0; j < m && t.b_within_powers; ++j) {
    const Rational g(t.multipliers[j], t.multipliers[0]);
    if (same_class(g)) continue;
    bool permutes = true;
    for (std::size_t i = 0; i < m && permutes; ++i) {
      bool found = false;
      for (std::size_t l = 0; l < m && !found; ++l) found = same_class(g * Rational(t.multipliers[i], t.multipliers[l]));
      permutes = found;
    }
    if (permutes) t.b_within_powers = false;
  }

  // (iv) Minimal eventual period and the residue classes of T.
  w.ell = static_cast<long>(t.exponents.minimal_period());
  const auto ell = static_cast<std::size_t>(w.ell);
  std::vector<bool> classes(ell, false);
  for (std::size_t i = 0; i < period; ++i)
    if (t.exponents.residues[i]) classes[(t.exponents.threshold + i) % ell] = true;
  for (std::size_t i = 0; i < ell; ++i)
    if (classes[i]) t.residues.push_back(static_cast<long>(i));

  // C = {c ≥ 0 : c + T ⊆ T eventually}; equals ℓℕ by minimality of ℓ.
  t.c_exponents.threshold = 0;
  t.c_exponents.period = ell;
  for (std::size_t c = 0; c < ell; ++c) {
    bool shift_invariant = true;
    for (std::size_t i = 0; i < ell; ++i) shift_invariant = shift_invariant && classes[i] == classes[(i + c) % ell];
    t.c_exponents.residues.push_back(shift_invariant);
  }
  return w;
}

std::string ScaleWitness::str() const {
  std::vector<std::string> b, d, res;
  for (const auto& x : trace.multipliers) b.push_back(x.get_str());
  for (long x : trace.steps) d.push_back(std::to_string(x));
  for (long x : trace.residues) res.push_back(std::to_string(x));
  std::ostringstream out;
  out << "ell " << ell << "\n"
      << "coordinate " << trace.coordinate << "\n"
      << "derivatives " << trace.derivative_steps << "\n"
      << "accumulation_point " << trace.accumulation_point.str() << "\n"
      << "reflected " << (trace.reflected ? "true" : "false") << "\n"
      << "scale " << trace.scale.str() << "\n"
      << "multipliers " << join(b, ",") << "\n"
      << "steps " << join(d, ",") << "\n"
      << "base " << trace.reduced_base << "^" << trace.base_exponent << "\n"
      << "T " << trace.exponents.str() << "\n"
      << "B_within_powers " << (trace.b_within_powers ? "true" : "false") << "\n"
      << "residues " << join(res, ",") << "\n"
      << "C " << trace.c_exponents.str() << "\n";
  return out.str();
}

DefiningFormula defining_formula(const SparseNormalForm& f) {
  DefiningFormula out;
  out.base = f.alphabet.base;
  for (const auto& chain : f.chains) {
    for (const auto& w : chain.prefixes)
      if (!w.empty()) out.ell_l = std::lcm(out.ell_l, static_cast<std::int64_t>(w.size()));
    for (const auto& w : chain.loops) out.ell_l = std::lcm(out.ell_l, static_cast<std::int64_t>(w.size()));
  }

  const ExpSumDescription e = to_exp_sum(normalize_cycle_lengths(f));
  std::vector<std::string> disjuncts;
  for (const auto& chain : e.chains) {
    const long delta = chain.steps.empty() ? 0 : chain.steps.front();
    out.chains.push_back(chain);
    out.deltas.push_back(delta);

    std::vector<std::string> terms, vars;
    if (!is_zero(chain.coefficients[0])) terms.push_back(to_string(chain.coefficients[0]));
    for (std::size_t k = 1; k < chain.depth(); ++k) {
      const auto x = "x" + std::to_string(k);
      vars.push_back(x);
      if (!is_zero(chain.coefficients[k])) terms.push_back(to_string(chain.coefficients[k]) + "·" + x);
    }
    if (terms.empty()) terms.push_back(to_string(chain.coefficients[0]));
    std::string body = "(z = " + join(terms, " + ") + ")";
    if (vars.size() >= 2) {
      std::vector<std::string> order(vars.rbegin(), vars.rend());
      body += " ∧ (" + join(order, " ≤ ") + ")";
    }
    if (!vars.empty()) body = "∃" + join(vars, ",") + "∈D_" + std::to_string(delta) + " " + body;
    disjuncts.push_back(body);
  }
  out.text = join(disjuncts, " ∨ ");
  return out;
}

}  // namespace realreg
