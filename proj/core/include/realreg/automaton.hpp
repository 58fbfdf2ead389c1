#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "realreg/alphabet.hpp"
#include "realreg/rational.hpp"

namespace realreg {

using State = std::uint32_t;

struct Transition {
  State from = 0;
  Letter label = 0;
  State to = 0;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

struct Edge {
  Letter label = 0;
  State to = 0;
};

/// Ultimately periodic word spoke · cycle^ω.
struct LassoWord {
  Word spoke;
  Word cycle;

  friend bool operator==(const LassoWord&, const LassoWord&) = default;
  friend auto operator<=>(const LassoWord&, const LassoWord&) = default;
};

/// Nondeterministic Büchi automaton over the digit-tuple alphabet [base]^arity.
/// Several initial states are allowed. Values are immutable once built;
/// the constructor validates every invariant and sorts/deduplicates the
/// state sets and the transition list.
class BuchiAutomaton {
 public:
  BuchiAutomaton(Alphabet alphabet, std::size_t state_count, std::vector<State> initial,
                 std::vector<State> accepting, std::vector<Transition> transitions);

  const Alphabet& alphabet() const { return alphabet_; }
  int base() const { return alphabet_.base; }
  int arity() const { return alphabet_.arity; }
  std::size_t state_count() const { return state_count_; }

  const std::vector<State>& initial() const { return initial_; }
  const std::vector<State>& accepting() const { return accepting_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  bool is_initial(State q) const { return initial_flag_[q]; }
  bool is_accepting(State q) const { return accepting_flag_[q]; }
  /// Outgoing edges of `q`, sorted by (label, target).
  const std::vector<Edge>& out(State q) const { return out_[q]; }

  friend bool operator==(const BuchiAutomaton& a, const BuchiAutomaton& b) {
    return a.alphabet_ == b.alphabet_ && a.state_count_ == b.state_count_ &&
           a.initial_ == b.initial_ && a.accepting_ == b.accepting_ &&
           a.transitions_ == b.transitions_;
  }

 private:
  Alphabet alphabet_;
  std::size_t state_count_;
  std::vector<State> initial_;
  std::vector<State> accepting_;
  std::vector<Transition> transitions_;
  std::vector<bool> initial_flag_;
  std::vector<bool> accepting_flag_;
  std::vector<std::vector<Edge>> out_;
};

/// Reads the line-oriented `buchi v1` text format. No normalization is
/// applied; the automaton is returned as written.
BuchiAutomaton parse_automaton(std::string_view text);
std::string format_automaton(const BuchiAutomaton& a);

/// States reachable from an initial state that can also reach an accepting
/// state lying on a cycle.
std::vector<bool> useful_states(const BuchiAutomaton& a);
bool is_trim(const BuchiAutomaton& a);
/// Trim and every state accepting.
bool is_closed(const BuchiAutomaton& a);

/// Drops useless states, renumbering the survivors in increasing order.
/// Throws EmptyLanguage when nothing survives.
BuchiAutomaton trim(const BuchiAutomaton& a);

/// Merges mutually direct-simulating states and drops transitions into states
/// strictly simulated by a sibling target. The language is unchanged; the
/// result is trimmed unless the language is empty.
BuchiAutomaton reduce(const BuchiAutomaton& a);

/// Marks every state accepting. For a trim automaton the result recognizes
/// the topological closure of the language. Throws NotTrim otherwise.
BuchiAutomaton close(const BuchiAutomaton& a);

/// Intersection via the two-track flag product; only reachable product states
/// are built. The result is not trimmed (it may recognize the empty language).
BuchiAutomaton product(const BuchiAutomaton& a, const BuchiAutomaton& b);

/// Disjoint union (initial sets are joined).
BuchiAutomaton disjoint_union(const BuchiAutomaton& a, const BuchiAutomaton& b);

/// Keeps only coordinate `coordinate` (1-based) of every label.
BuchiAutomaton project(const BuchiAutomaton& a, int coordinate);

/// Single accepting state looping on every letter.
BuchiAutomaton full_automaton(int base, int arity = 1);

/// Exact Büchi acceptance of spoke·cycle^ω: searches the (state, offset)
/// graph for a reachable cycle through an accepting state.
bool accepts_lasso(const BuchiAutomaton& a, const LassoWord& w);

/// Number of distinct length-n words labelling a path from an initial state.
/// For a trim automaton these are exactly the length-n prefixes of accepted
/// words. Throws NotTrim.
BigInt prefix_count(const BuchiAutomaton& a, std::size_t n);
/// prefix_count for every length 0..n_max.
std::vector<BigInt> prefix_counts(const BuchiAutomaton& a, std::size_t n_max);

}  // namespace realreg
