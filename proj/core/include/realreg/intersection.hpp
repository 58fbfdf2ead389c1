#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "realreg/decomposition.hpp"
#include "realreg/rational.hpp"
#include "realreg/real_sets.hpp"

namespace realreg {

/// k^a = ℓ^b only for a = b = 0. Throws DomainError unless k, ℓ ≥ 2.
bool mult_independent(long k, long l);

/// Number of starred segments of a chain.
std::size_t simple_length(const Chain& chain);

/// A bound B carried as ln B. `exp_argument` is the exact integer inside the
/// exp(·) factor.
struct BoundValue {
  double log_value = 0.0;
  BigInt exp_argument;
  std::string formula;
};

/// ln of 2^{s+t+1}·(s+t+2)^{s+t+2}·exp(3(6(s+t+1))^{3(s+t+1)}).
BoundValue intersection_bound_log(long s, long t);

/// ln of exp(3(6(n+m))^{3n+3m}), the nondegenerate solution count for a
/// fully nondegenerate equation.
BoundValue nondegenerate_bound_log(long n, long m);

/// ln of (n+m+2)^{n+m+2}·exp(3(6(n+m+1))^{3(n+m+1)}), the count for block-wise
/// nondegenerate solutions.
BoundValue blockwise_bound_log(long n, long m);

/// Bound derived from automaton sizes alone: with `states_s` and `states_t`
/// states, S has at most k^{states_s} simple pieces of length ≤ states_s (and
/// likewise for T), giving ln(k^a·ℓ^b) + the bound for (a, b).
BoundValue automaton_bound_log(long k, std::size_t states_s, long l, std::size_t states_t);

struct TwoBaseProblem {
  ExpSumDescription s;  // base k
  ExpSumDescription t;  // base ℓ
  long height = 60;
};

/// Problem file:
///   S base <k> [arity <m>]
///   chain ...
///   T base <l> [arity <m>]
///   chain ...
///   height <H>
TwoBaseProblem parse_problem(std::string_view text);

struct IntersectionReport {
  /// Sorted ascending.
  std::vector<RationalVec> values;
  long height = 0;
  /// ln of the cardinality bound for the union of chain pairs.
  double bound_log = 0.0;
  /// Enumeration covered every exponent ≤ height; nothing is claimed beyond.
  bool complete_up_to_height = true;
};

inline constexpr std::size_t kDefaultNodeCap = 5'000'000;

/// Common points of S and T with every exponent ≤ height, by exact
/// enumeration. Arity > 1 intersects coordinate projections first and keeps
/// the product candidates lying in both sets. Throws DependentBases,
/// ArityMismatch, or ResourceLimit.
IntersectionReport intersect_sparse(const TwoBaseProblem& p, std::size_t node_cap = kDefaultNodeCap);

struct SUnitSolution {
  std::vector<long> exponents;
  std::vector<Rational> values;
  friend bool operator==(const SUnitSolution&, const SUnitSolution&) = default;
};

/// Solutions of a₀X₀ + … + a_N X_N = 0 with X₀…X_split ∈ k^ℤ and the rest in
/// ℓ^ℤ, all exponents in [−height, height], such that no nonempty subsum of
/// either block vanishes. Sorted by exponent tuple.
std::vector<SUnitSolution> sunit_solutions(const std::vector<Rational>& coefficients, std::size_t split, long k,
                                           long l, long height, std::size_t node_cap = kDefaultNodeCap);

}  // namespace realreg
