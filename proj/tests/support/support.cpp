#include "support.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "realreg/error.hpp"

namespace realreg::testing {

std::uint64_t seed() {
  if (const char* s = std::getenv("REALREG_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240607;
}

BuchiAutomaton from_regex(const std::string& text) { return trim(regex_to_automaton(parse_omega_regex(text))); }

std::string fixture_path(const std::string& name) { return std::string(REALREG_FIXTURE_DIR) + "/" + name; }

BuchiAutomaton load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_automaton(buffer.str());
}

namespace {

struct Entry {
  const char* name;
  const char* regex;
  int sparse;
};

const Entry kEntries[] = {
    {"halves", "base 2 arity 1: 0*10^w", 1},
    {"zero", "base 2 arity 1: 0^w", 1},
    {"odd_powers", "base 2 arity 1: (00)*10^w", 1},
    {"two_ones", "base 2 arity 1: 0*10*10^w", 1},
    {"thirds_pair", "base 3 arity 1: 0*10^w|0*20^w", 1},
    {"one_third", "base 2 arity 1: (01)^w", 1},
    {"alternating_tail", "base 2 arity 1: 1(01)*0^w", 1},
    {"block_12", "base 3 arity 1: 0*(12)*0^w", 1},
    {"threes", "base 4 arity 1: 3*0^w", 1},
    {"double_one", "base 2 arity 1: 0*110^w", 1},
    {"depth4", "base 3 arity 1: 0*10*20*10^w", 1},
    {"block_001", "base 2 arity 1: (001)*10^w", 1},
    {"one", "base 2 arity 1: 1^w", 1},
    {"rational_quarter", "base 4 arity 1: 0123^w", 1},
    {"block_01_twos", "base 3 arity 1: (01)*2^w", 1},
    {"zeros_then_ones", "base 2 arity 1: 0*1^w", 1},
    {"finite_four", "base 2 arity 1: (0|1)(0|1)0^w", 1},
    {"two_sided", "base 3 arity 1: 2*0^w|0*2^w", 1},
    {"two_blocks", "base 2 arity 1: (10)*(11)*0^w", 1},
    {"choice_then_threes", "base 4 arity 1: 0*(1|2)3*0^w", 1},
    {"three_ones", "base 2 arity 1: 0*10*10*10^w", 1},
    {"twos_tail", "base 3 arity 1: 10*10*12^w", 1},
    {"cantor3", "base 3 arity 1: (0|2)^w", 0},
    {"full2", "base 2 arity 1: (0|1)^w", 0},
    {"dyadic_finite", "base 2 arity 1: (0|1)*10^w", 0},
    {"cantor_mixed", "base 3 arity 1: (0|2)^w|10*20^w", 0},
    {"pairs", "base 2 arity 1: (00|01)^w", 0},
    {"cantor4", "base 4 arity 1: (0|3)^w", 0},
    {"swaps", "base 2 arity 1: 0*(01|10)^w", 0},
    {"binary_then_twos", "base 3 arity 1: (0|1)*2^w", 0},
    {"golden", "base 2 arity 1: (0|11)^w", 0},
    {"full3", "base 3 arity 1: (0|1|2)^w", 0},
    {"full4", "base 4 arity 1: (0|1|2|3)^w", 0},
    {"even_free", "base 2 arity 1: (0(0|1))^w", 0},
    {"upper_half", "base 2 arity 1: 1(0|1)^w", 0},
    {"ones_twos", "base 3 arity 1: 0*(1|2)^w", 0},
    {"diagonal_points", "base 2 arity 2: (0,0)*(1,1)(0,0)^w", 1},
    {"diagonal", "base 2 arity 2: ((0,0)|(1,1))^w", 0},
    {"antidiagonal_points", "base 2 arity 2: (0,1)*(1,0)^w", 1},
};

}  // namespace

BuchiAutomaton random_trim_automaton(std::mt19937_64& rng, int base, std::size_t max_states) {
  const Alphabet alphabet{base, 1};
  while (true) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
    std::bernoulli_distribution edge(1.6 / static_cast<double>(n * static_cast<std::size_t>(base)));
    std::bernoulli_distribution accept(0.5);
    std::vector<Transition> transitions;
    std::vector<State> accepting;
    for (State p = 0; p < n; ++p) {
      if (accept(rng)) accepting.push_back(p);
      for (Letter c = 0; c < alphabet.size(); ++c)
        for (State q = 0; q < n; ++q)
          if (edge(rng)) transitions.push_back({p, c, q});
    }
    try {
      return trim(BuchiAutomaton(alphabet, n, {0}, accepting, transitions));
    } catch (const Error&) {
    }
  }
}

std::vector<Fixture> corpus(std::size_t random_count) {
  std::vector<Fixture> out;
  for (const auto& e : kEntries) out.push_back({e.name, from_regex(e.regex), e.sparse});
  std::mt19937_64 rng(seed());
  for (std::size_t i = 0; i < random_count; ++i) {
    const int base = std::uniform_int_distribution<int>(2, 4)(rng);
    out.push_back({"random" + std::to_string(i), random_trim_automaton(rng, base, 6), -1});
  }
  return out;
}

std::vector<Fixture> sparse_fixtures() {
  std::vector<Fixture> out;
  for (auto& f : corpus(0))
    if (f.expect_sparse == 1 && f.automaton.arity() == 1) out.push_back(std::move(f));
  return out;
}

std::vector<LassoWord> all_lassos(const Alphabet& alphabet, std::size_t max_spoke, std::size_t max_cycle) {
  std::vector<std::vector<Word>> by_length{{Word{}}};
  for (std::size_t n = 1; n <= std::max(max_spoke, max_cycle); ++n) {
    std::vector<Word> next;
    for (const auto& w : by_length.back())
      for (Letter c = 0; c < alphabet.size(); ++c) {
        Word x = w;
        x.push_back(c);
        next.push_back(std::move(x));
      }
    by_length.push_back(std::move(next));
  }
  std::vector<LassoWord> out;
  for (std::size_t s = 0; s <= max_spoke; ++s)
    for (std::size_t c = 1; c <= max_cycle; ++c)
      for (const auto& spoke : by_length[s])
        for (const auto& cycle : by_length[c]) out.push_back({spoke, cycle});
  return out;
}

LassoWord sample_closed_lasso(const BuchiAutomaton& closed, std::mt19937_64& rng) {
  const auto& init = closed.initial();
  State q = init[std::uniform_int_distribution<std::size_t>(0, init.size() - 1)(rng)];
  std::vector<std::ptrdiff_t> first_visit(closed.state_count(), -1);
  Word walk;
  while (first_visit[q] < 0) {
    first_visit[q] = static_cast<std::ptrdiff_t>(walk.size());
    const auto& out = closed.out(q);
    const auto& e = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
    walk.push_back(e.label);
    q = e.to;
  }
  return {Word(walk.begin(), walk.begin() + first_visit[q]), Word(walk.begin() + first_visit[q], walk.end())};
}

bool lasso_equivalent(const BuchiAutomaton& a, const BuchiAutomaton& b, std::size_t max_spoke,
                      std::size_t max_cycle, std::string* counterexample) {
  for (const auto& w : all_lassos(a.alphabet(), max_spoke, max_cycle)) {
    if (accepts_lasso(a, w) != accepts_lasso(b, w)) {
      if (counterexample)
        *counterexample = a.alphabet().word_to_string(w.spoke) + "(" + a.alphabet().word_to_string(w.cycle) + ")^w";
      return false;
    }
  }
  return true;
}

}  // namespace realreg::testing
