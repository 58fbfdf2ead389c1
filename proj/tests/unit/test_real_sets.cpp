#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "realreg/decomposition.hpp"
#include "realreg/error.hpp"
#include "realreg/real_sets.hpp"
#include "support.hpp"

using namespace realreg;
using realreg::testing::from_regex;

namespace {

std::vector<int> digits(const Word& w) { return {w.begin(), w.end()}; }

/// Values of every chain word with star exponents ≤ depth, by the lasso oracle.
std::set<RationalVec> chain_word_values(const SparseNormalForm& f, std::size_t depth) {
  std::set<RationalVec> out;
  for (const auto& chain : f.chains) {
    std::vector<std::size_t> e(chain.star_count(), 0);
    while (true) {
      const LassoWord w = chain.instantiate(e);
      RationalVec v;
      for (int i = 0; i < f.alphabet.arity; ++i)
        v.push_back(realreg::testing::lasso_value(coordinate_digits(f.alphabet, w.spoke, i),
                                                  coordinate_digits(f.alphabet, w.cycle, i), f.alphabet.base));
      out.insert(v);
      std::size_t i = 0;
      for (; i < e.size(); ++i) {
        if (++e[i] <= depth) break;
        e[i] = 0;
      }
      if (i == e.size()) break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("nu agrees with the geometric-series oracle") {
  std::mt19937_64 rng(realreg::testing::seed());
  for (int base = 2; base <= 5; ++base) {
    const Alphabet al{base, 1};
    for (int trial = 0; trial < 200; ++trial) {
      LassoWord w;
      const auto s = std::uniform_int_distribution<int>(0, 5)(rng);
      const auto c = std::uniform_int_distribution<int>(1, 5)(rng);
      std::uniform_int_distribution<Letter> digit(0, static_cast<Letter>(base - 1));
      for (int i = 0; i < s; ++i) w.spoke.push_back(digit(rng));
      for (int i = 0; i < c; ++i) w.cycle.push_back(digit(rng));
      CHECK(nu(w, al)[0] == realreg::testing::lasso_value(digits(w.spoke), digits(w.cycle), base));
    }
  }
  CHECK(nu({{1}, {0}}, Alphabet{2, 1})[0] == Rational(1, 2));
  CHECK(nu({{}, {1}}, Alphabet{2, 1})[0] == Rational(1));
}

TEST_CASE("expansions of rationals") {
  const auto third = expansion(Rational(1, 3), 3);
  REQUIRE(third.size() == 2);
  CHECK(third[0] == LassoWord{{1}, {0}});
  CHECK(third[1] == LassoWord{{0}, {2}});
  CHECK(expansion(Rational(1, 3), 2) == std::vector<LassoWord>{{{}, {0, 1}}});
  CHECK(expansion(Rational(0), 2) == std::vector<LassoWord>{{{}, {0}}});
  CHECK(expansion(Rational(1), 3) == std::vector<LassoWord>{{{}, {2}}});
  CHECK_THROWS_AS(expansion(Rational(3, 2), 2), Error);
  CHECK_THROWS_AS(expansion(Rational(-1, 2), 2), Error);

  for (int base = 2; base <= 4; ++base)
    for (long q = 1; q <= 30; ++q)
      for (long p = 0; p <= q; ++p) {
        const Rational x(p, q);
        const auto all = expansion(x, base);
        CHECK(all.size() <= 2);
        for (const auto& w : all) CHECK(nu(w, Alphabet{base, 1})[0] == x);
      }
}

TEST_CASE("joint expansions and membership") {
  const auto cantor = from_regex("base 3 arity 1: (0|2)^w");
  CHECK(member(cantor, {Rational(1, 3)}));
  CHECK(member(cantor, {Rational(1, 4)}));
  CHECK(member(cantor, {Rational(3, 4)}));
  CHECK_FALSE(member(cantor, {Rational(1, 2)}));
  CHECK_THROWS_AS(member(cantor, {Rational(1, 2), Rational(0)}), Error);

  const Alphabet pair{2, 2};
  const auto j = joint_expansions({Rational(1, 2), Rational(1, 3)}, pair);
  CHECK(j.size() == 2);
  for (const auto& w : j) CHECK(nu(w, pair) == RationalVec{Rational(1, 2), Rational(1, 3)});
  const auto diag = from_regex("base 2 arity 2: (0,0)*(1,1)(0,0)^w");
  CHECK(member(diag, {Rational(1, 4), Rational(1, 4)}));
  CHECK_FALSE(member(diag, {Rational(1, 4), Rational(1, 2)}));
}

TEST_CASE("exponential sums of normal forms") {
  const auto e = to_exp_sum(sparse_normal_form(from_regex("base 2 arity 1: 0*10^w")));
  CHECK(format_exp_sum(e) == "base 2 arity 1\nchain c0=0 (c1=1/2,d1=1)\n");

  for (const auto& f : realreg::testing::corpus(0)) {
    if (f.expect_sparse != 1) continue;
    CAPTURE(f.name);
    const auto nf = sparse_normal_form(f.automaton);
    const auto desc = to_exp_sum(nf);
    CHECK(enumerate_points(desc, 4) == chain_word_values(nf, 4));
    CHECK(parse_exp_sum(format_exp_sum(desc)) == desc);
    for (const auto& p : enumerate_points(desc, 3)) {
      CHECK(contains(desc, p));
      CHECK(member(f.automaton, p));
    }
  }
}

TEST_CASE("exact containment") {
  const auto e = parse_exp_sum("base 2 arity 1\nchain c0=0 (c1=1/2,d1=1) (c2=1/4,d2=1)\n");
  CHECK(contains(e, {Rational(1, 2) + Rational(1, 4)}));
  CHECK(contains(e, {Rational(1, 1024) + Rational(1, 2048 * 1024)}));
  CHECK_FALSE(contains(e, {Rational(1, 2)}));
  CHECK_FALSE(contains(e, {Rational(1, 3)}));
  CHECK_FALSE(contains(e, {Rational(0)}));
  CHECK(contains(closure(e), {Rational(0)}));
  CHECK(contains(closure(e), {Rational(1, 8)}));
}

TEST_CASE("canonical form drops set-preserving zero coefficients") {
  ExpSumDescription e{2, 1, {}};
  e.chains.push_back({{{Rational(1, 2)}, {Rational(1, 4)}, {Rational(0)}}, {1, 2}});
  e.chains.push_back({{{Rational(0)}, {Rational(0)}, {Rational(1, 2)}}, {1, 1}});
  e.chains.push_back({{{Rational(0)}, {Rational(0)}, {Rational(1, 2)}}, {1, 2}});
  const auto c = canonicalize(e);
  REQUIRE(c.chains.size() == 3);
  CHECK(format_chain(c.chains[0]) == "chain c0=0 (c1=0,d1=1) (c2=1/2,d2=2)");
  CHECK(format_chain(c.chains[1]) == "chain c0=0 (c1=1/2,d1=1)");
  CHECK(format_chain(c.chains[2]) == "chain c0=1/2 (c1=1/4,d1=1)");
  for (std::size_t d = 0; d <= 3; ++d)
    for (const auto& p : enumerate_points(e, d)) CHECK(contains(c, p));
}

TEST_CASE("projection, merge and text form") {
  const auto e = parse_exp_sum("base 2 arity 2\nchain c0=(0,1/2) (c1=(1/2,0),d1=1)\n");
  CHECK(format_exp_sum(project(e, 1)) == "base 2 arity 1\nchain c0=0 (c1=1/2,d1=1)\n");
  CHECK(format_exp_sum(project(e, 2)) == "base 2 arity 1\nchain c0=1/2\n");
  CHECK_THROWS_AS(project(e, 3), Error);
  const auto m = merge(project(e, 1), project(e, 2));
  CHECK(m.chains.size() == 2);
  CHECK_THROWS_AS(merge(e, project(e, 1)), Error);
  CHECK_THROWS_AS(parse_exp_sum("base 2 arity 1\nchain c0=1/2 (c1=1/2,d1=0)\n"), Error);
  CHECK_THROWS_AS(parse_exp_sum("chain c0=1\n"), Error);
  CHECK_THROWS_AS(parse_exp_sum("base 2 arity 2\nchain c0=1/2\n"), Error);
}

TEST_CASE("prefix intervals") {
  const Alphabet al{3, 1};
  const auto iv = prefix_interval(parse_word(al, "02"), al);
  CHECK(iv.low[0] == Rational(2, 9));
  CHECK(iv.high[0] == Rational(1, 3));
}

TEST_CASE("enumeration cap") {
  const auto e = parse_exp_sum("base 2 arity 1\nchain c0=0 (c1=1/2,d1=1) (c2=1/4,d2=1)\n");
  CHECK_THROWS_AS(enumerate_points(e, 100, 50), Error);
}
