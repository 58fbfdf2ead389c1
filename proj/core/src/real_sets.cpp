#include "realreg/real_sets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "realreg/error.hpp"

namespace realreg {

namespace {

BigInt digits_integer(const std::vector<int>& digits, int base) {
  BigInt v = 0;
  for (int d : digits) v = v * base + d;
  return v;
}

BigInt big_pow(long base, std::size_t exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  return out;
}

/// ν_r(v^ω) = [v]_r / (r^{|v|} − 1).
Rational periodic_value(const std::vector<int>& digits, int base) {
  return Rational(digits_integer(digits, base), big_pow(base, digits.size()) - 1);
}

}  // namespace

Rational digits_value(const std::vector<int>& digits, int base) {
  return Rational(digits_integer(digits, base), big_pow(base, digits.size()));
}

RationalVec nu(const LassoWord& w, const Alphabet& alphabet) {
  if (w.cycle.empty()) fail(ErrorKind::Domain, "lasso cycle must be nonempty");
  RationalVec out;
  for (int i = 0; i < alphabet.arity; ++i) {
    const auto spoke = coordinate_digits(alphabet, w.spoke, i);
    const auto cycle = coordinate_digits(alphabet, w.cycle, i);
    out.push_back(digits_value(spoke, alphabet.base) +
                  inverse_power(alphabet.base, static_cast<long>(spoke.size())) * periodic_value(cycle, alphabet.base));
  }
  return out;
}

std::vector<LassoWord> expansion(const Rational& x, int base) {
  if (x.sign() < 0 || x > Rational(1)) fail(ErrorKind::Domain, "point " + x.str() + " outside [0,1]");
  if (x == Rational(1)) return {LassoWord{{}, {static_cast<Letter>(base - 1)}}};
  if (x.is_zero()) return {LassoWord{{}, {0}}};

  const BigInt q = x.denominator();
  BigInt rem = x.numerator();
  std::map<BigInt, std::size_t> seen;
  Word digits;
  while (!seen.count(rem)) {
    seen.emplace(rem, digits.size());
    rem *= base;
    const BigInt d = rem / q;
    digits.push_back(static_cast<Letter>(d.get_ui()));
    rem %= q;
  }
  const auto start = static_cast<std::ptrdiff_t>(seen.at(rem));
  LassoWord standard{Word(digits.begin(), digits.begin() + start), Word(digits.begin() + start, digits.end())};
  if (standard.cycle != Word{0}) return {standard};

  // r-adic point: the spoke ends in a nonzero digit; its dual ends in (r−1)^ω.
  LassoWord dual = standard;
  dual.spoke.back() -= 1;
  dual.cycle = {static_cast<Letter>(base - 1)};
  return {standard, dual};
}

std::vector<LassoWord> joint_expansions(const RationalVec& x, const Alphabet& alphabet) {
  if (static_cast<int>(x.size()) != alphabet.arity)
    fail(ErrorKind::Domain, "point has " + std::to_string(x.size()) + " coordinates, expected " +
                                std::to_string(alphabet.arity));
  std::vector<std::vector<LassoWord>> per_coordinate;
  for (const auto& xi : x) per_coordinate.push_back(expansion(xi, alphabet.base));

  std::vector<LassoWord> out;
  std::vector<std::size_t> pick(x.size(), 0);
  while (true) {
    std::size_t spoke = 0, period = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto& w = per_coordinate[i][pick[i]];
      spoke = std::max(spoke, w.spoke.size());
      period = std::lcm(period, w.cycle.size());
    }
    LassoWord joint;
    for (std::size_t pos = 0; pos < spoke + period; ++pos) {
      DigitTuple t;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& w = per_coordinate[i][pick[i]];
        const Letter d = pos < w.spoke.size() ? w.spoke[pos] : w.cycle[(pos - w.spoke.size()) % w.cycle.size()];
        t.push_back(static_cast<int>(d));
      }
      (pos < spoke ? joint.spoke : joint.cycle).push_back(alphabet.encode(t));
    }
    out.push_back(std::move(joint));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < per_coordinate[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

bool member(const BuchiAutomaton& a, const RationalVec& x) {
  for (const auto& w : joint_expansions(x, a.alphabet()))
    if (accepts_lasso(a, w)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Exponential-sum descriptions

ExpSumChain ExpSumChain::truncated(std::size_t j) const {
  if (j == 0 || j > depth()) fail(ErrorKind::Domain, "truncation depth out of range");
  ExpSumChain out;
  out.coefficients.assign(coefficients.begin(), coefficients.begin() + static_cast<std::ptrdiff_t>(j));
  out.steps.assign(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(j - 1));
  return out;
}

RationalVec ExpSumChain::evaluate(int base, const std::vector<std::size_t>& exponents) const {
  if (exponents.size() + 1 != depth()) fail(ErrorKind::Domain, "wrong number of exponents");
  RationalVec value = coefficients[0];
  long exponent = 0;
  for (std::size_t k = 1; k < depth(); ++k) {
    exponent += steps[k - 1] * static_cast<long>(exponents[k - 1]);
    value = value + inverse_power(base, exponent) * coefficients[k];
  }
  return value;
}

std::size_t ExpSumDescription::max_depth() const {
  std::size_t d = 0;
  for (const auto& c : chains) d = std::max(d, c.depth());
  return d;
}

ExpSumDescription to_exp_sum(const SparseNormalForm& f) {
  ExpSumDescription e{f.alphabet.base, f.alphabet.arity, {}};
  const int r = f.alphabet.base;
  for (const auto& chain : f.chains) {
    const std::size_t d = chain.depth();
    // offsets[k] = |u_1| + … + |u_k|.
    std::vector<long> offsets(d + 1, 0);
    for (std::size_t k = 1; k <= d; ++k) offsets[k] = offsets[k - 1] + static_cast<long>(chain.prefixes[k - 1].size());

    ExpSumChain out;
    for (std::size_t k = 0; k < d; ++k) {
      RationalVec c;
      for (int i = 0; i < f.alphabet.arity; ++i) {
        const auto u_next = coordinate_digits(f.alphabet, chain.prefixes[k], i);
        const auto v_next = coordinate_digits(f.alphabet, chain.loops[k], i);
        Rational value = inverse_power(r, offsets[k]) * digits_value(u_next, r) +
                         inverse_power(r, offsets[k + 1]) * periodic_value(v_next, r);
        if (k >= 1) value -= inverse_power(r, offsets[k]) * periodic_value(coordinate_digits(f.alphabet, chain.loops[k - 1], i), r);
        c.push_back(std::move(value));
      }
      out.coefficients.push_back(std::move(c));
      if (k + 1 < d) out.steps.push_back(static_cast<long>(chain.loops[k].size()));
    }
    e.chains.push_back(std::move(out));
  }
  return canonicalize(std::move(e));
}

ExpSumDescription canonicalize(ExpSumDescription e) {
  for (auto& chain : e.chains) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = chain.depth(); k-- > 1;) {
        if (!is_zero(chain.coefficients[k])) continue;
        const bool last = k + 1 == chain.depth();
        if (!last && chain.steps[k - 1] != chain.steps[k]) continue;
        chain.coefficients.erase(chain.coefficients.begin() + static_cast<std::ptrdiff_t>(k));
        chain.steps.erase(chain.steps.begin() + static_cast<std::ptrdiff_t>(k - 1));
        changed = true;
        break;
      }
    }
  }
  std::sort(e.chains.begin(), e.chains.end());
  e.chains.erase(std::unique(e.chains.begin(), e.chains.end()), e.chains.end());
  return e;
}

ExpSumDescription closure(const ExpSumDescription& e) {
  ExpSumDescription out{e.base, e.arity, {}};
  for (const auto& chain : e.chains)
    for (std::size_t j = 1; j <= chain.depth(); ++j) out.chains.push_back(chain.truncated(j));
  return canonicalize(std::move(out));
}

std::set<RationalVec> enumerate_points(const ExpSumDescription& e, std::size_t depth, std::size_t cap) {
  std::set<RationalVec> points;
  std::size_t work = 0;
  for (const auto& chain : e.chains) {
    const std::size_t stars = chain.depth() - 1;
    // Depth-first over exponent tuples, carrying the running sum.
    std::function<void(std::size_t, const RationalVec&, long)> walk = [&](std::size_t k, const RationalVec& sum, long exponent) {
      if (k > stars) {
        if (++work > cap) fail(ErrorKind::ResourceLimit, "point enumeration exceeded the cap");
        points.insert(sum);
        return;
      }
      for (std::size_t n = 0; n <= depth; ++n) {
        const long next = exponent + chain.steps[k - 1] * static_cast<long>(n);
        walk(k + 1, sum + inverse_power(e.base, next) * chain.coefficients[k], next);
      }
    };
    walk(1, chain.coefficients[0], 0);
  }
  return points;
}

namespace {

bool chain_contains(const ExpSumChain& chain, int base, const RationalVec& x, std::size_t k) {
  const RationalVec y = x - chain.coefficients[k];
  if (k + 1 == chain.depth()) return is_zero(y);
  if (is_zero(y)) return chain_contains(chain, base, y, k + 1);
  std::size_t coord = 0;
  while (y[coord].is_zero()) ++coord;
  Rational bound = 0;
  for (std::size_t j = k + 1; j < chain.depth(); ++j) bound += abs(chain.coefficients[j][coord]);
  if (bound.is_zero()) return false;
  // y = r^{−δn}·t with |t| ≤ bound, so r^{−δn} ≥ |y|/bound.
  const Rational target = abs(y[coord]);
  const long step = chain.steps[k];
  Rational scale = 1;  // r^{δn}
  const Rational factor = pow(Rational(base), step);
  while (target * scale <= bound) {
    if (chain_contains(chain, base, scale * y, k + 1)) return true;
    scale *= factor;
  }
  return false;
}

}  // namespace

bool contains(const ExpSumChain& chain, int base, const RationalVec& x) {
  if (x.size() != chain.coefficients[0].size()) fail(ErrorKind::Domain, "point arity mismatch");
  return chain_contains(chain, base, x, 0);
}

bool contains(const ExpSumDescription& e, const RationalVec& x) {
  return std::any_of(e.chains.begin(), e.chains.end(), [&](const ExpSumChain& c) { return contains(c, e.base, x); });
}

ExpSumDescription project(const ExpSumDescription& e, int coordinate) {
  if (coordinate < 1 || coordinate > e.arity)
    fail(ErrorKind::IndexOutOfRange, "coordinate " + std::to_string(coordinate) + " outside 1.." + std::to_string(e.arity));
  ExpSumDescription out{e.base, 1, {}};
  for (const auto& chain : e.chains) {
    ExpSumChain c;
    c.steps = chain.steps;
    for (const auto& v : chain.coefficients) c.coefficients.push_back({v[static_cast<std::size_t>(coordinate - 1)]});
    out.chains.push_back(std::move(c));
  }
  return canonicalize(std::move(out));
}

ExpSumDescription merge(const ExpSumDescription& a, const ExpSumDescription& b) {
  if (a.base != b.base) fail(ErrorKind::BaseMismatch, "descriptions use different bases");
  if (a.arity != b.arity) fail(ErrorKind::ArityMismatch, "descriptions use different arities");
  ExpSumDescription out = a;
  out.chains.insert(out.chains.end(), b.chains.begin(), b.chains.end());
  return canonicalize(std::move(out));
}

PrefixInterval prefix_interval(const Word& w, const Alphabet& alphabet) {
  PrefixInterval out;
  const Rational width = inverse_power(alphabet.base, static_cast<long>(w.size()));
  for (int i = 0; i < alphabet.arity; ++i) {
    const Rational low = digits_value(coordinate_digits(alphabet, w, i), alphabet.base);
    out.low.push_back(low);
    out.high.push_back(low + width);
  }
  return out;
}

}  // namespace realreg
