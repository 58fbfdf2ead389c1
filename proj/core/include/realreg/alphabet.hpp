#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace realreg {

/// One digit per coordinate, each in [0, base).
using DigitTuple = std::vector<int>;

/// Digit tuples are packed into a single integer code (first coordinate most
/// significant) so transitions and words stay flat.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

struct Alphabet {
  int base = 2;
  int arity = 1;

  std::uint32_t size() const;
  bool valid(const DigitTuple& t) const;
  Letter encode(const DigitTuple& t) const;
  DigitTuple decode(Letter c) const;
  int digit(Letter c, int coordinate) const;

  /// "d1,...,dm" with no spaces.
  std::string letter_to_string(Letter c) const;
  /// Arity 1: digits concatenated ("010"); otherwise tuples separated by ' '.
  /// The empty word prints as "".
  std::string word_to_string(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Parses "d1,...,dm"; throws DomainError on a digit >= base or wrong arity.
Letter parse_letter(const Alphabet& alphabet, std::string_view text);

/// Arity 1 accepts bare digit strings ("0102"); arity > 1 expects tuples
/// separated by whitespace or ';'.
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Shortest u with w = u^k.
Word primitive_root(const Word& w);

/// Coordinate `i` of every letter in `w`.
std::vector<int> coordinate_digits(const Alphabet& alphabet, const Word& w, int coordinate);

}  // namespace realreg
