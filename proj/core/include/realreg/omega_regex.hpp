#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "realreg/alphabet.hpp"
#include "realreg/automaton.hpp"

namespace realreg {

enum class RegexKind { Empty, Epsilon, Symbol, Concat, Union, Star, Omega };

struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

/// Immutable expression node. `Empty` (the empty language) never comes out of
/// the parser; it only appears transiently during state elimination.
struct Regex {
  RegexKind kind = RegexKind::Empty;
  Letter symbol = 0;
  std::vector<RegexPtr> children;
};

// Smart constructors. They apply the obvious identities (∅ and ε absorption,
// flattening, (x*)* = x*) so that state elimination output stays readable.
RegexPtr re_empty();
RegexPtr re_epsilon();
RegexPtr re_symbol(Letter c);
RegexPtr re_concat(RegexPtr a, RegexPtr b);
RegexPtr re_union(RegexPtr a, RegexPtr b);
RegexPtr re_star(RegexPtr a);
RegexPtr re_omega(RegexPtr a);
RegexPtr re_word(const Word& w);

bool nullable(const Regex& r);
bool denotes_empty(const Regex& r);

/// Prints in the input grammar: "()" for ε, "(x)^w" for ω-powers.
std::string to_string(const Regex& r, const Alphabet& alphabet);

/// An ω-regular expression together with its alphabet. Each top-level
/// branch is a finite expression followed by exactly one ω-power.
struct OmegaRegex {
  Alphabet alphabet;
  RegexPtr root;

  std::string str() const;
};

/// Parses "base <r> arity <m>: <expr>". Arity-1 literals are single digits;
/// higher-arity literals are comma-separated tuples separated by whitespace.
/// Throws ParseError, DomainError (bad digit), or OmegaArityError when an
/// ω-power is applied to a language containing the empty word.
OmegaRegex parse_omega_regex(std::string_view text);
/// Same grammar without the header.
OmegaRegex parse_omega_regex(const Alphabet& alphabet, std::string_view expression);

/// Thompson construction for the finite parts plus a looping hub state for
/// each ω-power, followed by ε-elimination and trimming.
BuchiAutomaton regex_to_automaton(const OmegaRegex& e);

}  // namespace realreg
