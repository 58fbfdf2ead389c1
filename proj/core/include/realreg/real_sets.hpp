#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "realreg/automaton.hpp"
#include "realreg/decomposition.hpp"
#include "realreg/rational.hpp"

namespace realreg {

/// Σ w_i r^{−(i+1)} for a finite digit word.
Rational digits_value(const std::vector<int>& digits, int base);

/// ν_r of spoke·cycle^ω, one exact value per coordinate.
RationalVec nu(const LassoWord& w, const Alphabet& alphabet);

/// All ultimately periodic base-r expansions of x ∈ [0,1] in canonical form
/// (shortest spoke, primitive cycle). Two results exactly for r-adic x in
/// (0,1); 0 maps to 0^ω only and 1 to (r−1)^ω only. Arity-1 letters.
std::vector<LassoWord> expansion(const Rational& x, int base);

/// Joint lassos of a point: every combination of per-coordinate expansions,
/// spokes padded to equal length and cycles aligned to the lcm period.
std::vector<LassoWord> joint_expansions(const RationalVec& x, const Alphabet& alphabet);

/// Whether the automaton accepts at least one representation of x.
bool member(const BuchiAutomaton& a, const RationalVec& x);

/// {c₀ + c₁X₁ + … + c_{d−1}X_{d−1}} with X_k = r^{−(δ₁n₁+…+δ_k n_k)}.
struct ExpSumChain {
  std::vector<RationalVec> coefficients;  // c₀ … c_{d−1}
  std::vector<long> steps;                // δ₁ … δ_{d−1}

  std::size_t depth() const { return coefficients.size(); }
  /// Chain keeping c₀ … c_{j−1}.
  ExpSumChain truncated(std::size_t j) const;
  RationalVec evaluate(int base, const std::vector<std::size_t>& exponents) const;

  friend bool operator==(const ExpSumChain&, const ExpSumChain&) = default;
  friend auto operator<=>(const ExpSumChain&, const ExpSumChain&) = default;
};

struct ExpSumDescription {
  int base = 2;
  int arity = 1;
  std::vector<ExpSumChain> chains;

  bool empty() const { return chains.empty(); }
  std::size_t max_depth() const;
  friend bool operator==(const ExpSumDescription&, const ExpSumDescription&) = default;
};

/// Geometric-series evaluation of each chain; δ_i = |v_i|. The result is
/// canonicalized.
ExpSumDescription to_exp_sum(const SparseNormalForm& f);

/// Drops a zero coefficient c_k (k ≥ 1) when that is set-preserving (k is the
/// last index, or δ_k = δ_{k+1}, in which case δ_{k+1} is kept), then sorts
/// and deduplicates the chains.
ExpSumDescription canonicalize(ExpSumDescription e);

/// Topological closure: every chain together with all of its truncations.
ExpSumDescription closure(const ExpSumDescription& e);

/// Every chain value with all n_i ≤ depth. Throws ResourceLimit past `cap`
/// substitutions.
std::set<RationalVec> enumerate_points(const ExpSumDescription& e, std::size_t depth,
                                       std::size_t cap = 5'000'000);

/// Exact membership test. Each exponent is bounded by the distance of x from
/// the chain's partial sums, so the search is finite.
bool contains(const ExpSumDescription& e, const RationalVec& x);
bool contains(const ExpSumChain& chain, int base, const RationalVec& x);

/// Coordinate `coordinate` (1-based) of every chain, canonicalized.
ExpSumDescription project(const ExpSumDescription& e, int coordinate);

/// Union of two descriptions over the same base and arity.
ExpSumDescription merge(const ExpSumDescription& a, const ExpSumDescription& b);

/// Per-coordinate interval [value(w), value(w) + r^{−|w|}].
struct PrefixInterval {
  RationalVec low;
  RationalVec high;
};
PrefixInterval prefix_interval(const Word& w, const Alphabet& alphabet);

/// Text form, one chain per line:
///   base <r> arity <m>
///   chain c0=<q> (c1=<q>,d1=<n>) ...
/// Vector coefficients print as "(p/q,...)".
std::string format_chain(const ExpSumChain& chain);
std::string format_exp_sum(const ExpSumDescription& e);
ExpSumChain parse_chain(std::string_view line, int arity);
ExpSumDescription parse_exp_sum(std::string_view text);

}  // namespace realreg
