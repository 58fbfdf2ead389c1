#include <charconv>
#include <sstream>

#include "realreg/error.hpp"
#include "realreg/real_sets.hpp"

namespace realreg {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line_no) : text_(text), line_(line_no) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) error("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }
  /// A scalar "p/q" or a parenthesized vector "(p/q,...)".
  RationalVec value(int arity) {
    skip_space();
    std::size_t end = pos_;
    if (peek('(')) {
      end = text_.find(')', pos_);
      if (end == std::string_view::npos) error("unbalanced parentheses");
      ++end;
    } else {
      while (end < text_.size() && text_[end] != ' ' && text_[end] != ',' && text_[end] != ')') ++end;
    }
    const auto token = text_.substr(pos_, end - pos_);
    pos_ = end;
    RationalVec v;
    try {
      v = parse_rational_vec(token);
    } catch (const Error&) {
      error("malformed rational '" + std::string(token) + "'");
    }
    if (static_cast<int>(v.size()) != arity)
      error("coefficient '" + std::string(token) + "' has wrong arity");
    return v;
  }
  long integer() {
    skip_space();
    long value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) error("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void error(const std::string& what) const { throw ParseError(line_, what); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

ExpSumChain parse_chain_at(std::string_view line, int arity, std::size_t line_no) {
  Cursor in(line, line_no);
  in.expect("chain");
  in.expect("c0=");
  ExpSumChain chain;
  chain.coefficients.push_back(in.value(arity));
  for (std::size_t k = 1; !in.done(); ++k) {
    const auto index = std::to_string(k);
    in.expect("(c" + index + "=");
    chain.coefficients.push_back(in.value(arity));
    in.expect(",d" + index + "=");
    const long step = in.integer();
    if (step < 1) in.error("step d" + index + " must be positive");
    chain.steps.push_back(step);
    in.expect(")");
  }
  return chain;
}

}  // namespace

std::string format_chain(const ExpSumChain& chain) {
  std::string out = "chain c0=" + to_string(chain.coefficients[0]);
  for (std::size_t k = 1; k < chain.depth(); ++k) {
    const auto index = std::to_string(k);
    out += " (c" + index + "=" + to_string(chain.coefficients[k]) + ",d" + index + "=" +
           std::to_string(chain.steps[k - 1]) + ")";
  }
  return out;
}

std::string format_exp_sum(const ExpSumDescription& e) {
  std::string out = "base " + std::to_string(e.base) + " arity " + std::to_string(e.arity) + "\n";
  for (const auto& chain : e.chains) out += format_chain(chain) + "\n";
  return out;
}

ExpSumChain parse_chain(std::string_view line, int arity) { return parse_chain_at(line, arity, 0); }

ExpSumDescription parse_exp_sum(std::string_view text) {
  ExpSumDescription e;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    if (!header) {
      Cursor in(line, line_no);
      in.expect("base");
      const long base = in.integer();
      in.expect("arity");
      const long arity = in.integer();
      if (!in.done()) in.error("trailing text after header");
      if (base < 2) in.error("base must be at least 2");
      if (arity < 1) in.error("arity must be at least 1");
      e.base = static_cast<int>(base);
      e.arity = static_cast<int>(arity);
      header = true;
      continue;
    }
    e.chains.push_back(parse_chain_at(line, e.arity, line_no));
  }
  if (!header) throw ParseError(0, "missing 'base <r> arity <m>' header");
  return e;
}

}  // namespace realreg
