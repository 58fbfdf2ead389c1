#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "realreg/automaton.hpp"
#include "realreg/decomposition.hpp"
#include "realreg/real_sets.hpp"

namespace realreg {

// ---------------------------------------------------------------------------
// Sparsity

/// Two distinct equal-length cycle words at one state (the u{a,b}* pattern).
struct NonSparseWitness {
  State state = 0;
  Word first;
  Word second;
};

struct SparsityVerdict {
  bool sparse = false;
  std::optional<NonSparseWitness> witness;   // set when not sparse
  std::optional<SparseNormalForm> normal_form;  // set when sparse
  /// Witness state ids refer to this trimmed automaton.
  std::optional<BuchiAutomaton> trimmed;

  /// "SPARSE" or "NONSPARSE q=<q> a=<word> b=<word>".
  std::string str() const;
};

/// Looks for a diagonal state (q,q) of the self-product lying on a cycle that
/// uses a transition pair with different labels. Input must be trim.
std::optional<NonSparseWitness> find_nonsparse_witness(const BuchiAutomaton& trimmed);

/// Structural sparsity decision; attaches the normal form when sparse.
/// Non-trim input is trimmed first (EmptyLanguage when L = ∅).
SparsityVerdict classify_sparsity(const BuchiAutomaton& a, std::size_t chain_cap = kDefaultChainCap);

// ---------------------------------------------------------------------------
// Growth oracle (test-only cross-check of classify_sparsity)

enum class Growth { Polynomial, Exponential };

struct GrowthReport {
  Growth growth = Growth::Polynomial;
  /// Fitted exponential rate λ over the top half of the range.
  double ratio = 1.0;
  /// Fitted polynomial degree over the same window.
  double degree = 0.0;
  double exp_residual = 0.0;
  double poly_residual = 0.0;
  std::vector<BigInt> counts;
};

/// Exact prefix counts for n ≤ n_max, then two least-squares fits of
/// log count(n) over n ∈ [n_max/2, n_max]: a + n log λ and a + k log(n+1).
/// Exponential when the exponential model fits better and λ > 1.05.
GrowthReport growth_oracle(const BuchiAutomaton& a, std::size_t n_max);

// ---------------------------------------------------------------------------
// Hausdorff dimension

struct Dimension {
  int base = 2;
  double value = 0.0;
  double spectral_radius = 1.0;
  /// Set when the spectral radius is an integer.
  std::optional<long> integer_radius;

  /// "0.630929753571 = log(2)/log(3)" (12 decimals; exact form when known).
  std::string str() const;
};

/// Dimension of ν_r(L) for a closed arity-1 automaton: log_r of the Perron
/// root of the subset-construction graph. Throws ArityError or NotClosed.
Dimension hausdorff_dim(const BuchiAutomaton& a);

/// Spectral radius of a nonnegative integer matrix (exposed for tests).
double spectral_radius(const std::vector<std::vector<long>>& matrix);

// ---------------------------------------------------------------------------
// Cantor–Bendixson structure of sparse sets

/// Accumulation points: every proper truncation of every chain of depth ≥ 2.
ExpSumDescription cb_derivative(const ExpSumDescription& e);
/// Least k with the k-th derivative empty.
std::size_t cb_rank(const ExpSumDescription& e);
/// A point of the set that is isolated in it, if the set is nonempty.
std::optional<RationalVec> isolated_point(const ExpSumDescription& e);

// ---------------------------------------------------------------------------
// Cantor set extraction

/// Closure of the union of the uncountable V-W components of an arity-1
/// automaton. Throws InteriorPresent when the closure has dimension 1 and
/// NoCantor when every component is countable.
BuchiAutomaton extract_cantor(const BuchiAutomaton& a);

// ---------------------------------------------------------------------------
// Scale extraction and defining formulas

/// Eventually periodic subset of ℕ: explicit membership below `threshold`,
/// then periodic with `residues[(n − threshold) mod period]`.
struct EventuallyPeriodicSet {
  std::size_t threshold = 0;
  std::size_t period = 1;
  std::vector<bool> head;
  std::vector<bool> residues;

  bool contains(std::size_t n) const;
  /// Smallest p ≥ 1 with n ∈ S ⇔ n + p ∈ S for all n ≥ threshold.
  std::size_t minimal_period() const;
  bool infinite() const;
  std::string str() const;
};

struct ScaleTrace {
  int coordinate = 1;
  std::size_t derivative_steps = 0;
  Rational accumulation_point;
  /// Whether the neighbourhood was reflected (all multipliers negative).
  bool reflected = false;
  Rational scale;                  // positive integer the set was multiplied by
  std::vector<BigInt> multipliers;  // b_i
  std::vector<long> steps;          // δ_i, in units of the reduced base
  long reduced_base = 2;            // s with r = s^k, k maximal
  long base_exponent = 1;           // k
  EventuallyPeriodicSet exponents;  // T with B = s^{−T}
  bool b_within_powers = true;      // B ⊆ s^ℤ, checked class by class
  std::vector<long> residues;       // i₁ < … < i_q
  EventuallyPeriodicSet c_exponents;  // C = s^{−(this set)}
};

struct ScaleWitness {
  long ell = 1;
  ScaleTrace trace;
  std::string str() const;
};

/// Symbolic run of the construction that defines r^{−ℓℕ} from an infinite
/// closed sparse unary set. Throws FiniteSet or NotUnary.
ScaleWitness extract_scale(const ExpSumDescription& e);

struct DefiningFormula {
  int base = 2;
  /// Per-chain (c, δ) data after cycle normalization; δ is the common step.
  std::vector<ExpSumChain> chains;
  std::vector<long> deltas;
  /// lcm of the lengths of all nonempty chain words.
  std::int64_t ell_l = 1;
  std::string text;
};

/// ∃x₁…x_{d−1} ∈ D_δ (z = c₀ + c₁·x₁ + …) ∧ (x_{d−1} ≤ … ≤ x₁) per chain,
/// disjoined over chains. D_δ names r^{−δℕ}.
DefiningFormula defining_formula(const SparseNormalForm& f);

// ---------------------------------------------------------------------------
// Verdict

enum class TamenessLabel { DMinimal_NIP, TP2, HypothesisFails };
std::string to_string(TamenessLabel label);

struct TamenessVerdict {
  bool sparse = false;
  std::vector<Dimension> coordinate_dims;
  TamenessLabel label = TamenessLabel::DMinimal_NIP;

  std::string str() const;
};

TamenessVerdict tameness_verdict(const BuchiAutomaton& a);

}  // namespace realreg
