// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "realreg/analysis.hpp"
#include "realreg/error.hpp"
#include "realreg/intersection.hpp"
#include "support.hpp"

using namespace realreg;
namespace t = realreg::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string temp_path(const std::string& stem) {
  return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/realreg_acc_" + stem;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream b;
  b << in.rdbuf();
  return b.str();
}

std::vector<State> run_word(const BuchiAutomaton& a, const Word& w) {
  std::vector<State> s = a.initial();
  for (Letter c : w) {
    std::vector<State> next;
    for (State p : s)
      for (const auto& e : a.out(p))
        if (e.label == c) next.push_back(e.to);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    s = std::move(next);
  }
  return s;
}

// ---------------------------------------------------------------------------

Outcome dichotomy() {
  Outcome o;
  const auto fixtures = t::corpus(20);
  std::size_t randoms = 0;
  o.require(fixtures.size() >= 50, "corpus has fewer than 50 automata");
  for (const auto& f : fixtures) {
    if (f.expect_sparse < 0) ++randoms;
    const auto& a = f.automaton;
    o.require(is_trim(a), f.name + " is not trim");
    o.require(a.base() >= 2 && a.base() <= 4, f.name + " base out of range");
    o.require(a.state_count() <= 6, f.name + " has " + std::to_string(a.state_count()) + " states");
    const bool sparse = classify_sparsity(a).sparse;
    const auto g = growth_oracle(a, 30);
    const bool polynomial = g.growth == Growth::Polynomial;
    o.require(sparse == polynomial, f.name + ": classify and growth oracle disagree");
    if (f.expect_sparse >= 0) o.require(sparse == (f.expect_sparse == 1), f.name + ": unexpected verdict");
    if (polynomial)
      o.require(g.degree <= static_cast<double>(a.state_count()) + 0.5,
                f.name + ": polynomial degree " + std::to_string(g.degree));
    else
      o.require(g.ratio >= 1.2, f.name + ": ambiguous exponential ratio " + std::to_string(g.ratio));
  }
  o.require(randoms == 20, "expected 20 random automata");
  if (o.pass) o.detail = std::to_string(fixtures.size()) + " automata agree";
  return o;
}

Outcome dimension() {
  Outcome o;
  const double cantor = hausdorff_dim(t::load_fixture("cantor3.buchi")).value;
  o.require(std::abs(cantor - std::log(2.0) / std::log(3.0)) < 1e-9, "Cantor dimension off");
  for (int r = 2; r <= 6; ++r) o.require(hausdorff_dim(full_automaton(r)).value == 1.0, "full automaton not 1");
  for (const auto& f : t::sparse_fixtures())
    o.require(hausdorff_dim(close(f.automaton)).value == 0.0, f.name + ": sparse closure has positive dimension");
  const std::pair<const char*, const char*> unions[] = {
      {"base 3 arity 1: (0|2)^w", "base 3 arity 1: (00|01|10)^w"},
      {"base 2 arity 1: (0|10)^w", "base 2 arity 1: 0*10^w"},
      {"base 4 arity 1: (0|3)^w", "base 4 arity 1: (1|2)(0|1|2)^w"},
  };
  for (const auto& [x, y] : unions) {
    const auto a = t::from_regex(x), b = t::from_regex(y);
    const double da = hausdorff_dim(close(a)).value, db = hausdorff_dim(close(b)).value;
    const double du = hausdorff_dim(close(trim(disjoint_union(a, b)))).value;
    o.require(std::abs(du - std::max(da, db)) < 1e-9, std::string("union dimension for ") + x);
  }
  return o;
}

Outcome tfae() {
  Outcome o;
  for (const auto& f : t::corpus(20)) {
    const auto closed = close(f.automaton);
    const bool sparse = classify_sparsity(closed).sparse;
    bool nf_ok = true;
    std::optional<SparseNormalForm> nf;
    try {
      nf = sparse_normal_form(closed);
    } catch (const Error& e) {
      nf_ok = false;
      o.require(e.kind() == ErrorKind::NotSparse, f.name + ": unexpected error kind");
    }
    o.require(sparse == nf_ok, f.name + ": sparsity and normal-form extraction disagree");
    if (!nf) continue;
    bool points_ok = true;
    for (const auto& p : enumerate_points(to_exp_sum(*nf), 6)) {
      bool round_trip = member(closed, p);
      for (const auto& w : joint_expansions(p, closed.alphabet())) round_trip = round_trip && nu(w, closed.alphabet()) == p;
      points_ok = points_ok && round_trip;
    }
    o.require(points_ok, f.name + ": enumerated point failed the member round trip");
  }
  const auto dyadic = t::from_regex("base 2 arity 1: (0|1)*10^w");
  o.require(!classify_sparsity(dyadic).sparse, "(0|1)*10^w should be non-sparse");
  return o;
}

Outcome closure_fact() {
  Outcome o;
  std::mt19937_64 rng(t::seed());
  for (const auto& f : t::corpus(20)) {
    const auto closed = close(f.automaton);
    for (int i = 0; i < 200; ++i) {
      const LassoWord w = t::sample_closed_lasso(closed, rng);
      o.require(accepts_lasso(closed, w), f.name + ": sampled lasso rejected");
      Word prefix;
      for (std::size_t n = 0; n <= 20; ++n) {
        o.require(!run_word(f.automaton, prefix).empty(), f.name + ": prefix not extendable");
        prefix.push_back(n < w.spoke.size() ? w.spoke[n] : w.cycle[(n - w.spoke.size()) % w.cycle.size()]);
      }
    }
  }
  for (const auto& f : t::sparse_fixtures()) {
    const auto nf = sparse_normal_form(f.automaton);
    const auto points = enumerate_points(to_exp_sum(nf), 4);
    const auto closed_desc = to_exp_sum(sparse_closure(nf));
    const auto closed = close(f.automaton);
    // Limits: every truncation point of the description.
    for (const auto& p : enumerate_points(closure(to_exp_sum(nf)), 3)) {
      if (points.count(p)) continue;
      o.require(member(closed, p), f.name + ": limit point missing from the closed automaton");
      o.require(contains(closed_desc, p), f.name + ": limit point missing from the sparse closure");
    }
  }
  return o;
}

Outcome cantor_bendixson() {
  Outcome o;
  const char* chains[] = {"chain c0=1/3\n", "chain c0=0 (c1=1/2,d1=1)\n", "chain c0=0 (c1=1/2,d1=1) (c2=1/4,d2=1)\n"};
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto e = closure(parse_exp_sum("base 2 arity 1\n" + std::string(chains[d - 1])));
    o.require(cb_rank(e) == d, "rank of depth " + std::to_string(d) + " closure");
  }
  std::size_t compared = 0;
  for (const auto& f : t::sparse_fixtures()) {
    const auto e = closure(to_exp_sum(sparse_normal_form(f.automaton)));
    const auto cloud = enumerate_points(e, 12);
    const auto derivative = cb_derivative(e);
    for (const auto& p : enumerate_points(e, 1)) {
      ++compared;
      o.require(t::accumulates(cloud, p, e.base, 10) == contains(derivative, p),
                f.name + ": derivative disagrees with ε-isolation at " + to_string(p));
    }
    o.require(cb_rank(e) <= e.max_depth(), f.name + ": rank exceeds chain depth");
    if (!derivative.empty()) {
      const auto iso = isolated_point(derivative);
      o.require(iso && contains(derivative, *iso) && !contains(cb_derivative(derivative), *iso),
                f.name + ": accumulation set has no isolated point");
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " points compared";
  return o;
}

Outcome scale() {
  Outcome o;
  struct Case {
    const char* body;
    long ell;
    std::vector<BigInt> multipliers;
  };
  const Case cases[] = {
      {"chain c0=0 (c1=1/2,d1=1)\n", 1, {1}},
      {"chain c0=0 (c1=1/2,d1=2)\n", 2, {1}},
      {"chain c0=0 (c1=1/4,d1=1)\nchain c0=0 (c1=3/4,d1=1)\n", 1, {1, 3}},
  };
  for (const auto& c : cases) {
    const auto e = closure(parse_exp_sum(std::string("base 2 arity 1\n") + c.body));
    const auto w = extract_scale(e);
    o.require(w.ell == c.ell, "ℓ = " + std::to_string(w.ell) + " for " + c.body);
    o.require(w.trace.multipliers == c.multipliers, std::string("multipliers for ") + c.body);
    // B = {x : a ± b_i·x/scale ∈ A for all i} agrees with s^{−T} on powers of s.
    const auto& tr = w.trace;
    const long s = tr.reduced_base;
    const std::size_t start = tr.exponents.threshold + 20;
    const Rational sign = tr.reflected ? Rational(-1) : Rational(1);
    for (std::size_t n = start; n < start + 3 * tr.exponents.period; ++n) {
      const Rational x = inverse_power(s, static_cast<long>(n));
      bool in_b = true;
      for (const auto& b : tr.multipliers)
        in_b = in_b && contains(e, {tr.accumulation_point + sign * Rational(b) * x / tr.scale});
      o.require(in_b == tr.exponents.contains(n), "B ≠ s^{-T} at n = " + std::to_string(n));
      o.require(tr.exponents.contains(n) == tr.exponents.contains(n + static_cast<std::size_t>(w.ell)),
                "T is not periodic with period ℓ");
      if (tr.multipliers.size() > 1) {
        const Rational off = Rational(tr.multipliers[1], tr.multipliers[0]) * x;
        bool off_in_b = true;
        for (const auto& b : tr.multipliers)
          off_in_b = off_in_b && contains(e, {tr.accumulation_point + sign * Rational(b) * off / tr.scale});
        o.require(!off_in_b, "B contains a non-power of s");
      }
    }
    o.require(tr.c_exponents.residues.size() == static_cast<std::size_t>(w.ell) && tr.c_exponents.residues[0] &&
                  std::count(tr.c_exponents.residues.begin(), tr.c_exponents.residues.end(), true) == 1,
              "C is not s^{-ℓℕ}");
  }
  return o;
}

/// Reads the emitted formula text back into (c, δ) chains.
DefiningFormula parse_formula(const std::string& text, int base) {
  DefiningFormula f;
  f.base = base;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(" ∨ ", pos);
    if (end == std::string::npos) end = text.size();
    const std::string part = text.substr(pos, end - pos);
    pos = end == text.size() ? end : end + std::string(" ∨ ").size();

    long delta = 0;
    std::size_t vars = 0;
    if (part.rfind("∃", 0) == 0) {
      const auto d = part.find("∈D_");
      delta = std::stol(part.substr(d + std::string("∈D_").size()));
      vars = static_cast<std::size_t>(std::count(part.begin(), part.begin() + static_cast<std::ptrdiff_t>(d), 'x'));
    }
    const auto open = part.find("(z = ");
    const auto close = part.find(')', open);
    const std::string sum = part.substr(open + 5, close - open - 5);
    ExpSumChain chain;
    chain.coefficients.assign(vars + 1, RationalVec{Rational(0)});
    chain.steps.assign(vars, delta);
    std::size_t tp = 0;
    while (tp < sum.size()) {
      auto te = sum.find(" + ", tp);
      if (te == std::string::npos) te = sum.size();
      const std::string term = sum.substr(tp, te - tp);
      tp = te == sum.size() ? te : te + 3;
      const auto dot = term.find("·x");
      if (dot == std::string::npos) {
        chain.coefficients[0] = {Rational::parse(term)};
      } else {
        const auto k = std::stoul(term.substr(dot + std::string("·x").size()));
        chain.coefficients[k] = {Rational::parse(term.substr(0, dot))};
      }
    }
    f.chains.push_back(chain);
    f.deltas.push_back(delta);
  }
  return f;
}

/// Points of each chain with n₁ + … + n_{d−1} ≤ total.
std::set<RationalVec> total_exponent_points(const ExpSumDescription& e, std::size_t total) {
  std::set<RationalVec> out;
  for (const auto& chain : e.chains) {
    std::function<void(std::size_t, const RationalVec&, long, std::size_t)> walk =
        [&](std::size_t k, const RationalVec& z, long exponent, std::size_t used) {
          if (k == chain.depth()) {
            out.insert(z);
            return;
          }
          for (std::size_t n = 0; used + n <= total; ++n) {
            const long next = exponent + chain.steps[k - 1] * static_cast<long>(n);
            walk(k + 1, z + inverse_power(e.base, next) * chain.coefficients[k], next, used + n);
          }
        };
    walk(1, chain.coefficients[0], 0, 0);
  }
  return out;
}

Outcome defining_formulas() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& f : t::sparse_fixtures()) {
    if (checked == 10) break;
    const auto nf = sparse_normal_form(f.automaton);
    const auto formula = defining_formula(nf);
    const auto parsed = parse_formula(formula.text, nf.alphabet.base);
    const auto normalized = to_exp_sum(normalize_cycle_lengths(nf));
    const auto original = to_exp_sum(nf);

    o.require(t::formula_solutions(parsed, 5) == total_exponent_points(normalized, 5),
              f.name + ": formula solutions differ from the description");
    for (const auto& p : t::formula_solutions(parsed, 5))
      o.require(contains(original, p), f.name + ": formula solution outside the set");
    long widest = 1;
    for (const auto& c : original.chains)
      for (long d : c.steps) widest = std::max(widest, d);
    const auto wide = t::formula_solutions(parsed, 5 * original.max_depth() * static_cast<std::size_t>(widest) + 2);
    for (const auto& p : enumerate_points(original, 5))
      o.require(wide.count(p) == 1, f.name + ": enumerated point " + to_string(p) + " not a formula solution");

    std::int64_t ell = 1;
    for (const auto& chain : nf.chains) {
      for (const auto& w : chain.prefixes)
        if (!w.empty()) ell = std::lcm(ell, static_cast<std::int64_t>(w.size()));
      for (const auto& w : chain.loops) ell = std::lcm(ell, static_cast<std::int64_t>(w.size()));
    }
    o.require(formula.ell_l == ell, f.name + ": ℓ_L mismatch");
    ++checked;
  }
  o.require(checked == 10, "fewer than 10 sparse fixtures");
  return o;
}

Outcome cantor_extraction() {
  Outcome o;
  const std::string out = temp_path("cantor.buchi");
  const auto r = cli::run({"cantor", t::fixture_path("cantor_mixed.regex"), "-o", out});
  o.require(r.exit_code == 0, "cantor command failed: " + r.output);
  if (r.exit_code != 0) return o;
  const auto c = parse_automaton(slurp(out));
  std::remove(out.c_str());
  std::string bad;
  o.require(t::lasso_equivalent(c, t::from_regex("base 3 arity 1: (0|2)^w"), 5, 5, &bad),
            "not lasso-equivalent to (0|2)^ω at " + bad);
  const double d = hausdorff_dim(close(trim(c))).value;
  o.require(d > 0.0 && d < 1.0, "dimension outside (0,1)");
  const auto closed = close(trim(c));
  for (State q = 0; q < closed.state_count(); ++q) {
    const BuchiAutomaton rooted(closed.alphabet(), closed.state_count(), {q}, closed.accepting(), closed.transitions());
    o.require(find_nonsparse_witness(trim(rooted)).has_value(), "state " + std::to_string(q) + " is isolated");
  }
  for (const auto& f : t::sparse_fixtures()) {
    const std::string path = temp_path(f.name + ".buchi");
    std::ofstream(path) << format_automaton(f.automaton);
    const auto none = cli::run({"cantor", path});
    std::remove(path.c_str());
    o.require(none.exit_code == 3 && none.output.rfind("error: NoCantor\n", 0) == 0, f.name + ": expected NoCantor");
  }
  return o;
}

Outcome intersection() {
  Outcome o;
  const std::pair<const char*, std::vector<RationalVec>> cases[] = {
      {"powers.problem", {}},
      {"powers_from_one.problem", {{Rational(1)}}},
      {"two_terms.problem", {}},
  };
  for (const auto& [name, expected] : cases) {
    auto p = parse_problem(slurp(t::fixture_path(name)));
    o.require(p.height == 60, std::string(name) + " height");
    const auto high = intersect_sparse(p);
    o.require(high.values == expected, std::string(name) + ": wrong intersection");
    p.height = 40;
    o.require(intersect_sparse(p).values == high.values, std::string(name) + ": unstable between H=40 and H=60");
    const auto s_points = enumerate_points(p.s, 60), t_points = enumerate_points(p.t, 60);
    for (const auto& v : high.values)
      o.require(contains(p.s, v) && contains(p.t, v) && s_points.count(v) && t_points.count(v),
                std::string(name) + ": value fails re-verification");
  }
  const auto b = cli::run({"bound", "1", "1"});
  const auto at = b.output.find("log_bound ");
  o.require(b.exit_code == 0 && at != std::string::npos, "bound command failed");
  if (at != std::string::npos) {
    const double printed = std::stod(b.output.substr(at + 10));
    const double expected = 3.0 * std::pow(18.0, 9) + 3 * std::log(2.0) + 4 * std::log(4.0);
    o.require(std::abs(printed - expected) / expected < 1e-6, "bound value off");
  }
  o.require(mult_independent(2, 3) && !mult_independent(4, 8) && mult_independent(6, 12), "mult_independent");
  return o;
}

Outcome verdicts() {
  Outcome o;
  for (const auto& f : t::sparse_fixtures())
    o.require(tameness_verdict(f.automaton).label == TamenessLabel::DMinimal_NIP, f.name + " not DMinimal_NIP");
  o.require(tameness_verdict(t::load_fixture("single_one.buchi")).str() ==
                "sparse=true dims=[0.000000000000] label=DMinimal_NIP",
            "0*10^ω verdict");
  const auto cantor = tameness_verdict(t::load_fixture("cantor3.buchi"));
  o.require(!cantor.sparse && cantor.label == TamenessLabel::TP2 &&
                std::abs(cantor.coordinate_dims.at(0).value - std::log(2.0) / std::log(3.0)) < 1e-9,
            "Cantor verdict");
  o.require(tameness_verdict(t::load_fixture("full2.buchi")).label == TamenessLabel::HypothesisFails,
            "full base-2 verdict");
  const auto cli_verdict = cli::run({"verdict", t::fixture_path("cantor3.buchi")});
  o.require(cli_verdict.output == "ok\nsparse=false dims=[0.630929753571] label=TP2\n", "CLI verdict");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"dichotomy: classify_sparsity agrees with the growth oracle", dichotomy},
      {"dimension: Cantor, full, sparse and union values", dimension},
      {"TFAE on closed automata", tfae},
      {"closure: sampled prefixes extend and limits are members", closure_fact},
      {"Cantor–Bendixson ranks, ε-isolation and isolated points", cantor_bendixson},
      {"scale extraction with exact B = r^{-T} check", scale},
      {"defining formula solutions and ℓ_L", defining_formulas},
      {"Cantor extraction on the mixed fixture", cantor_extraction},
      {"two-base intersections, bound and independence", intersection},
      {"tameness verdict labels", verdicts},
  };
  int failures = 0, index = 0;
  for (const auto& [title, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << index << " " << title << ": " << (o.pass ? "PASS" : "FAIL");
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
