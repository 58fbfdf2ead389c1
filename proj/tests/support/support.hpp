#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "realreg/automaton.hpp"
#include "realreg/omega_regex.hpp"

namespace realreg::testing {

/// REALREG_SEED if set, else a fixed default.
std::uint64_t seed();

/// Compiles "base r arity m: expr" and trims the result.
BuchiAutomaton from_regex(const std::string& text);

/// Reads tests/fixtures/<name>.
BuchiAutomaton load_fixture(const std::string& name);
std::string fixture_path(const std::string& name);

struct Fixture {
  std::string name;
  BuchiAutomaton automaton;
  /// Expected sparsity for hand-written entries; unset for random ones.
  int expect_sparse = -1;
};

/// Hand-written corpus plus `random_count` seeded random trim automata over
/// bases 2–4 with at most 6 states.
std::vector<Fixture> corpus(std::size_t random_count = 20);

/// Sparse closed fixtures in arity 1 (normal form available).
std::vector<Fixture> sparse_fixtures();

BuchiAutomaton random_trim_automaton(std::mt19937_64& rng, int base, std::size_t max_states);

/// Every spoke·cycle^ω with |spoke| ≤ max_spoke and 1 ≤ |cycle| ≤ max_cycle.
std::vector<LassoWord> all_lassos(const Alphabet& alphabet, std::size_t max_spoke, std::size_t max_cycle);

/// A random accepted lasso of a closed automaton: a random walk stopped at
/// the first repeated state.
LassoWord sample_closed_lasso(const BuchiAutomaton& closed, std::mt19937_64& rng);

/// Agreement on all lassos within the bounds; the first disagreement is
/// written to `counterexample`.
bool lasso_equivalent(const BuchiAutomaton& a, const BuchiAutomaton& b, std::size_t max_spoke,
                      std::size_t max_cycle, std::string* counterexample = nullptr);

}  // namespace realreg::testing
