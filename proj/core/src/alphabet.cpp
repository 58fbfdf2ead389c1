#include "realreg/alphabet.hpp"

#include <cctype>

#include "realreg/error.hpp"

namespace realreg {

std::uint32_t Alphabet::size() const {
  std::uint32_t n = 1;
  for (int i = 0; i < arity; ++i) n *= static_cast<std::uint32_t>(base);
  return n;
}

bool Alphabet::valid(const DigitTuple& t) const {
  if (static_cast<int>(t.size()) != arity) return false;
  for (int d : t)
    if (d < 0 || d >= base) return false;
  return true;
}

Letter Alphabet::encode(const DigitTuple& t) const {
  if (!valid(t)) fail(ErrorKind::Domain, "digit tuple does not match base/arity");
  Letter code = 0;
  for (int d : t) code = code * static_cast<Letter>(base) + static_cast<Letter>(d);
  return code;
}

DigitTuple Alphabet::decode(Letter c) const {
  DigitTuple t(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<Letter>(base));
    c /= static_cast<Letter>(base);
  }
  return t;
}

int Alphabet::digit(Letter c, int coordinate) const {
  for (int i = arity - 1; i > coordinate; --i) c /= static_cast<Letter>(base);
  return static_cast<int>(c % static_cast<Letter>(base));
}

std::string Alphabet::letter_to_string(Letter c) const {
  std::string out;
  const DigitTuple t = decode(c);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out;
}

std::string Alphabet::word_to_string(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (arity > 1 && i) out += ' ';
    out += letter_to_string(w[i]);
  }
  return out;
}

Letter parse_letter(const Alphabet& alphabet, std::string_view text) {
  DigitTuple t;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (part.empty()) throw ParseError(0, "empty digit in tuple '" + std::string(text) + "'");
    int d = 0;
    for (char ch : part) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError(0, "non-digit in tuple '" + std::string(text) + "'");
      d = d * 10 + (ch - '0');
      if (d > 1'000'000) fail(ErrorKind::Domain, "digit too large in '" + std::string(text) + "'");
    }
    t.push_back(d);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(t.size()) != alphabet.arity)
    fail(ErrorKind::Domain, "tuple '" + std::string(text) + "' has arity " + std::to_string(t.size()) +
                                ", expected " + std::to_string(alphabet.arity));
  for (int d : t)
    if (d >= alphabet.base)
      fail(ErrorKind::Domain, "digit " + std::to_string(d) + " out of range for base " +
                                  std::to_string(alphabet.base));
  return alphabet.encode(t);
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word w;
  if (alphabet.arity == 1) {
    for (char ch : text) {
      if (ch == ' ' || ch == ';') continue;
      w.push_back(parse_letter(alphabet, std::string_view(&ch, 1)));
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ';')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != ';') ++end;
    w.push_back(parse_letter(alphabet, text.substr(pos, end - pos)));
    pos = end;
  }
  return w;
}

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return w;
}

std::vector<int> coordinate_digits(const Alphabet& alphabet, const Word& w, int coordinate) {
  std::vector<int> out;
  out.reserve(w.size());
  for (Letter c : w) out.push_back(alphabet.digit(c, coordinate));
  return out;
}

}  // namespace realreg
