#include "realreg/intersection.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "realreg/error.hpp"

namespace realreg {

namespace {

std::map<long, long> factor(long n) {
  std::map<long, long> out;
  for (long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

BigInt big_pow(long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  return out;
}

double big_to_double(const BigInt& x) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  if (exponent > 1023) return INFINITY;
  return std::ldexp(mantissa, static_cast<int>(exponent));
}

/// ln of a·ln(a) style prefactor plus 3(6n)^{e}.
BoundValue exp_bound(long six_factor, long exponent) {
  BoundValue b;
  b.exp_argument = 3 * big_pow(6 * six_factor, static_cast<unsigned long>(exponent));
  b.log_value = big_to_double(b.exp_argument);
  b.formula = "3·" + std::to_string(6 * six_factor) + "^" + std::to_string(exponent);
  return b;
}

void require_independent(long k, long l) {
  if (!mult_independent(k, l))
    fail(ErrorKind::DependentBases, "bases " + std::to_string(k) + " and " + std::to_string(l) +
                                        " are multiplicatively dependent");
}

long parse_long(std::string_view token, std::size_t line_no, const char* what) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line_no, std::string("malformed ") + what + " '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    auto end = line.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::set<RationalVec> intersect_points(const ExpSumDescription& s, const ExpSumDescription& t, long height,
                                       std::size_t cap) {
  const auto a = enumerate_points(s, static_cast<std::size_t>(height), cap);
  const auto b = enumerate_points(t, static_cast<std::size_t>(height), cap);
  std::set<RationalVec> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool block_nondegenerate(const std::vector<Rational>& terms) {
  const std::size_t n = terms.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Rational sum = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sum += terms[i];
    if (sum.is_zero()) return false;
  }
  return true;
}

struct BlockTuple {
  std::vector<long> exponents;
  std::vector<Rational> values;
};

/// Every exponent tuple of a block with nonzero subsums, keyed by block sum.
std::map<Rational, std::vector<BlockTuple>> block_sums(const std::vector<Rational>& coefficients, long base,
                                                       long height) {
  std::map<Rational, std::vector<BlockTuple>> out;
  const std::size_t n = coefficients.size();
  std::vector<long> e(n, -height);
  while (true) {
    BlockTuple tuple{e, {}};
    std::vector<Rational> terms;
    for (std::size_t i = 0; i < n; ++i) {
      tuple.values.push_back(pow(Rational(base), e[i]));
      terms.push_back(coefficients[i] * tuple.values.back());
    }
    if (block_nondegenerate(terms)) {
      Rational sum = 0;
      for (const auto& x : terms) sum += x;
      out[sum].push_back(std::move(tuple));
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++e[i] <= height) break;
      e[i] = -height;
    }
    if (i == n) break;
  }
  return out;
}

}  // namespace

bool mult_independent(long k, long l) {
  if (k < 2 || l < 2) fail(ErrorKind::Domain, "bases must be at least 2");
  const auto fk = factor(k), fl = factor(l);
  if (fk.size() != fl.size()) return true;
  // Proportional exponent vectors: fk[p]·fl[q0] = fl[p]·fk[q0] for every prime.
  const long p0 = fk.begin()->first;
  if (!fl.count(p0)) return true;
  for (const auto& [p, a] : fk) {
    const auto it = fl.find(p);
    if (it == fl.end()) return true;
    if (a * fl.at(p0) != it->second * fk.at(p0)) return true;
  }
  return false;
}

std::size_t simple_length(const Chain& chain) { return chain.star_count(); }

BoundValue intersection_bound_log(long s, long t) {
  if (s < 0 || t < 0) fail(ErrorKind::Domain, "lengths must be nonnegative");
  const long n = s + t;
  BoundValue b = exp_bound(n + 1, 3 * (n + 1));
  b.log_value += static_cast<double>(n + 1) * std::log(2.0) +
                 static_cast<double>(n + 2) * std::log(static_cast<double>(n + 2));
  b.formula = std::to_string(n + 1) + "·ln(2) + " + std::to_string(n + 2) + "·ln(" + std::to_string(n + 2) +
              ") + " + b.formula;
  return b;
}

BoundValue nondegenerate_bound_log(long n, long m) {
  if (n < 0 || m < 0) fail(ErrorKind::Domain, "block sizes must be nonnegative");
  return exp_bound(n + m, 3 * n + 3 * m);
}

BoundValue blockwise_bound_log(long n, long m) {
  if (n < 0 || m < 0) fail(ErrorKind::Domain, "block sizes must be nonnegative");
  BoundValue b = exp_bound(n + m + 1, 3 * (n + m + 1));
  b.log_value += static_cast<double>(n + m + 2) * std::log(static_cast<double>(n + m + 2));
  b.formula = std::to_string(n + m + 2) + "·ln(" + std::to_string(n + m + 2) + ") + " + b.formula;
  return b;
}

BoundValue automaton_bound_log(long k, std::size_t states_s, long l, std::size_t states_t) {
  const auto a = static_cast<long>(states_s), b = static_cast<long>(states_t);
  BoundValue out = intersection_bound_log(a, b);
  out.log_value += static_cast<double>(a) * std::log(static_cast<double>(k)) +
                   static_cast<double>(b) * std::log(static_cast<double>(l));
  out.formula = std::to_string(a) + "·ln(" + std::to_string(k) + ") + " + std::to_string(b) + "·ln(" +
                std::to_string(l) + ") + " + out.formula;
  return out;
}

TwoBaseProblem parse_problem(std::string_view text) {
  TwoBaseProblem p;
  ExpSumDescription* section = nullptr;
  bool seen_s = false, seen_t = false, seen_height = false;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokens_of(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "S" || tokens[0] == "T") {
      bool& seen = tokens[0] == "S" ? seen_s : seen_t;
      if (seen) throw ParseError(line_no, "duplicate '" + std::string(tokens[0]) + "' section");
      seen = true;
      if ((tokens.size() != 3 && tokens.size() != 5) || tokens[1] != "base" ||
          (tokens.size() == 5 && tokens[3] != "arity"))
        throw ParseError(line_no, "expected '" + std::string(tokens[0]) + " base <r> [arity <m>]'");
      section = tokens[0] == "S" ? &p.s : &p.t;
      section->base = static_cast<int>(parse_long(tokens[2], line_no, "base"));
      section->arity = tokens.size() == 5 ? static_cast<int>(parse_long(tokens[4], line_no, "arity")) : 1;
      if (section->base < 2) throw ParseError(line_no, "base must be at least 2");
      if (section->arity < 1) throw ParseError(line_no, "arity must be at least 1");
    } else if (tokens[0] == "height") {
      if (seen_height) throw ParseError(line_no, "duplicate 'height' line");
      if (tokens.size() != 2) throw ParseError(line_no, "'height' takes one value");
      seen_height = true;
      p.height = parse_long(tokens[1], line_no, "height");
      if (p.height < 0) throw ParseError(line_no, "height must be nonnegative");
    } else if (tokens[0] == "chain") {
      if (!section) throw ParseError(line_no, "chain outside an 'S' or 'T' section");
      try {
        section->chains.push_back(parse_chain(line, section->arity));
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
      }
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(tokens[0]) + "'");
    }
  }
  if (!seen_s || !seen_t) throw ParseError(0, "problem needs both 'S' and 'T' sections");
  p.s = canonicalize(std::move(p.s));
  p.t = canonicalize(std::move(p.t));
  return p;
}

IntersectionReport intersect_sparse(const TwoBaseProblem& p, std::size_t node_cap) {
  require_independent(p.s.base, p.t.base);
  if (p.s.arity != p.t.arity) fail(ErrorKind::ArityMismatch, "S and T have different arities");
  if (p.height < 0) fail(ErrorKind::Domain, "height must be nonnegative");

  IntersectionReport report;
  report.height = p.height;
  std::set<RationalVec> common;
  if (p.s.arity == 1) {
    common = intersect_points(p.s, p.t, p.height, node_cap);
  } else {
    // S ∩ T ⊆ Z₁ × … × Z_d with Z_i the intersection of the i-th projections.
    std::vector<std::vector<Rational>> z;
    for (int i = 1; i <= p.s.arity; ++i) {
      std::vector<Rational> zi;
      for (const auto& v : intersect_points(project(p.s, i), project(p.t, i), p.height, node_cap))
        zi.push_back(v[0]);
      if (zi.empty()) break;
      z.push_back(std::move(zi));
    }
    if (static_cast<int>(z.size()) == p.s.arity) {
      std::vector<std::size_t> pick(z.size(), 0);
      std::size_t work = 0;
      while (true) {
        if (++work > node_cap) fail(ErrorKind::ResourceLimit, "candidate product exceeded the node cap");
        RationalVec x;
        for (std::size_t i = 0; i < z.size(); ++i) x.push_back(z[i][pick[i]]);
        if (contains(p.s, x) && contains(p.t, x)) common.insert(std::move(x));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < z[i].size()) break;
          pick[i] = 0;
        }
        if (i == pick.size()) break;
      }
    }
  }
  report.values.assign(common.begin(), common.end());

  long s_len = 0, t_len = 0;
  for (const auto& c : p.s.chains) s_len = std::max(s_len, static_cast<long>(c.depth()) - 1);
  for (const auto& c : p.t.chains) t_len = std::max(t_len, static_cast<long>(c.depth()) - 1);
  report.bound_log = intersection_bound_log(s_len, t_len).log_value +
                     std::log(static_cast<double>(std::max<std::size_t>(1, p.s.chains.size()))) +
                     std::log(static_cast<double>(std::max<std::size_t>(1, p.t.chains.size())));
  if (!report.values.empty() && std::log(static_cast<double>(report.values.size())) > report.bound_log)
    fail(ErrorKind::Domain, "intersection exceeds the cardinality bound");
  return report;
}

std::vector<SUnitSolution> sunit_solutions(const std::vector<Rational>& coefficients, std::size_t split, long k,
                                           long l, long height, std::size_t node_cap) {
  require_independent(k, l);
  if (split + 1 >= coefficients.size()) fail(ErrorKind::Domain, "both blocks must be nonempty");
  if (height < 0) fail(ErrorKind::Domain, "height must be nonnegative");
  for (const auto& a : coefficients)
    if (a.is_zero()) fail(ErrorKind::Domain, "coefficients must be nonzero");

  const std::vector<Rational> left(coefficients.begin(), coefficients.begin() + static_cast<std::ptrdiff_t>(split + 1));
  const std::vector<Rational> right(coefficients.begin() + static_cast<std::ptrdiff_t>(split + 1), coefficients.end());
  const double width = std::log(static_cast<double>(2 * height + 1));
  if (static_cast<double>(std::max(left.size(), right.size())) * width > std::log(static_cast<double>(node_cap)))
    fail(ErrorKind::ResourceLimit, "exponent search exceeds the node cap");

  const auto left_sums = block_sums(left, k, height);
  const auto right_sums = block_sums(right, l, height);
  std::vector<SUnitSolution> out;
  for (const auto& [sum, tuples] : left_sums) {
    const auto it = right_sums.find(-sum);
    if (it == right_sums.end()) continue;
    for (const auto& a : tuples)
      for (const auto& b : it->second) {
        SUnitSolution s{a.exponents, a.values};
        s.exponents.insert(s.exponents.end(), b.exponents.begin(), b.exponents.end());
        s.values.insert(s.values.end(), b.values.begin(), b.values.end());
        out.push_back(std::move(s));
      }
  }
  std::sort(out.begin(), out.end(), [](const SUnitSolution& a, const SUnitSolution& b) { return a.exponents < b.exponents; });
  return out;
}

}  // namespace realreg
