#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "realreg/automaton.hpp"
#include "realreg/omega_regex.hpp"

namespace realreg {

/// One V·W^ω term: V = labels of paths initial → state, W = labels of
/// nontrivial paths state → state.
struct VWComponent {
  State state = 0;
  RegexPtr prefix;
  RegexPtr period;
};

struct VWDecomposition {
  Alphabet alphabet;
  std::vector<VWComponent> components;

  /// The union of all components as an ω-regex.
  OmegaRegex to_regex() const;
  /// Single component V_i·W_i^ω.
  OmegaRegex component_regex(std::size_t i) const;
};

/// Büchi decomposition L = ∪_q V_q W_q^ω over accepting states lying on a
/// cycle. Regexes are extracted by state elimination in ascending state id
/// order. A non-trim input is trimmed first (EmptyLanguage if L = ∅); state
/// ids refer to the trimmed automaton.
VWDecomposition vw_decompose(const BuchiAutomaton& a);

/// u₁v₁*u₂v₂*…u_{d−1}v_{d−1}*u_d v_d^ω. `prefixes[i]` is u_{i+1} and
/// `loops[i]` is v_{i+1}; the last loop is the ω-period. Every loop is
/// nonempty.
struct Chain {
  std::vector<Word> prefixes;
  std::vector<Word> loops;

  Chain() = default;
  Chain(std::vector<Word> prefixes, std::vector<Word> loops);

  std::size_t depth() const { return loops.size(); }
  /// Number of starred segments (d − 1).
  std::size_t star_count() const { return loops.empty() ? 0 : loops.size() - 1; }
  /// The chain word with star exponents `exponents` (size d − 1), as a lasso.
  LassoWord instantiate(const std::vector<std::size_t>& exponents) const;

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

struct SparseNormalForm {
  Alphabet alphabet;
  std::vector<Chain> chains;

  OmegaRegex to_regex() const;
  friend bool operator==(const SparseNormalForm&, const SparseNormalForm&) = default;
};

/// Upper bound on emitted chains before ResourceLimit is raised.
inline constexpr std::size_t kDefaultChainCap = 100'000;

/// Reads the chains off the condensation of the trimmed automaton: every
/// path through strongly connected components that ends in a component with
/// an accepting state yields chains whose loops are the component cycle
/// words. Throws NotSparse (a non-sparse witness exists), EmptyLanguage, or
/// ResourceLimit.
SparseNormalForm sparse_normal_form(const BuchiAutomaton& a, std::size_t chain_cap = kDefaultChainCap);

/// Makes all loops of each chain equal length N = lcm |v_i| by replacing v_i
/// with v_i^{N/|v_i|} and fanning u_i over u_i v_i^{a_i}, a_i < N/|v_i|.
SparseNormalForm normalize_cycle_lengths(const SparseNormalForm& f);

/// For each chain of depth d adds the truncations u₁v₁*…u_j v_j^ω, j < d.
/// The result denotes the topological closure of the input set.
SparseNormalForm sparse_closure(const SparseNormalForm& f);

/// Sorts chains, replaces ω-periods by their primitive roots and removes exact
/// duplicates.
SparseNormalForm canonicalize(SparseNormalForm f);

/// Text form:
///   nf v1
///   base <r>
///   arity <m>
///   chain (u1)(v1)*(u2)(v2)*...(ud)(vd)^w
/// Each chain line is itself a valid ω-regex body.
std::string format_normal_form(const SparseNormalForm& f);
SparseNormalForm parse_normal_form(std::string_view text);

}  // namespace realreg
