#include "realreg/omega_regex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "realreg/error.hpp"

namespace realreg {

namespace {

RegexPtr make(RegexKind kind, std::vector<RegexPtr> children = {}, Letter symbol = 0) {
  auto r = std::make_shared<Regex>();
  r->kind = kind;
  r->symbol = symbol;
  r->children = std::move(children);
  return r;
}

}  // namespace

RegexPtr re_empty() {
  static const RegexPtr empty = make(RegexKind::Empty);
  return empty;
}

RegexPtr re_epsilon() {
  static const RegexPtr eps = make(RegexKind::Epsilon);
  return eps;
}

RegexPtr re_symbol(Letter c) { return make(RegexKind::Symbol, {}, c); }

RegexPtr re_concat(RegexPtr a, RegexPtr b) {
  if (a->kind == RegexKind::Empty || b->kind == RegexKind::Empty) return re_empty();
  if (a->kind == RegexKind::Epsilon) return b;
  if (b->kind == RegexKind::Epsilon) return a;
  std::vector<RegexPtr> parts;
  for (const RegexPtr& x : {a, b}) {
    if (x->kind == RegexKind::Concat) parts.insert(parts.end(), x->children.begin(), x->children.end());
    else parts.push_back(x);
  }
  return make(RegexKind::Concat, std::move(parts));
}

namespace {

// Structural key used to deduplicate union branches.
std::string key(const Regex& r) {
  switch (r.kind) {
    case RegexKind::Empty: return "0";
    case RegexKind::Epsilon: return "e";
    case RegexKind::Symbol: return "s" + std::to_string(r.symbol);
    case RegexKind::Star: return "*(" + key(*r.children[0]) + ")";
    case RegexKind::Omega: return "w(" + key(*r.children[0]) + ")";
    case RegexKind::Concat:
    case RegexKind::Union: {
      std::string out = r.kind == RegexKind::Concat ? "c(" : "u(";
      for (const auto& c : r.children) out += key(*c) + ";";
      return out + ")";
    }
  }
  return "";
}

}  // namespace

RegexPtr re_union(RegexPtr a, RegexPtr b) {
  if (a->kind == RegexKind::Empty) return b;
  if (b->kind == RegexKind::Empty) return a;
  std::vector<RegexPtr> parts;
  std::set<std::string> seen;
  for (const RegexPtr& x : {a, b}) {
    const auto add = [&](const RegexPtr& y) {
      if (seen.insert(key(*y)).second) parts.push_back(y);
    };
    if (x->kind == RegexKind::Union)
      for (const auto& y : x->children) add(y);
    else
      add(x);
  }
  if (parts.size() == 1) return parts.front();
  return make(RegexKind::Union, std::move(parts));
}

RegexPtr re_star(RegexPtr a) {
  if (a->kind == RegexKind::Empty || a->kind == RegexKind::Epsilon) return re_epsilon();
  if (a->kind == RegexKind::Star) return a;
  return make(RegexKind::Star, {std::move(a)});
}

RegexPtr re_omega(RegexPtr a) { return make(RegexKind::Omega, {std::move(a)}); }

RegexPtr re_word(const Word& w) {
  RegexPtr r = re_epsilon();
  for (Letter c : w) r = re_concat(r, re_symbol(c));
  return r;
}

bool nullable(const Regex& r) {
  switch (r.kind) {
    case RegexKind::Empty: return false;
    case RegexKind::Epsilon: return true;
    case RegexKind::Symbol: return false;
    case RegexKind::Star: return true;
    case RegexKind::Omega: return false;
    case RegexKind::Concat:
      return std::all_of(r.children.begin(), r.children.end(), [](const RegexPtr& c) { return nullable(*c); });
    case RegexKind::Union:
      return std::any_of(r.children.begin(), r.children.end(), [](const RegexPtr& c) { return nullable(*c); });
  }
  return false;
}

bool denotes_empty(const Regex& r) {
  switch (r.kind) {
    case RegexKind::Empty: return true;
    case RegexKind::Epsilon:
    case RegexKind::Symbol:
    case RegexKind::Star: return false;
    case RegexKind::Omega: return denotes_empty(*r.children[0]);
    case RegexKind::Concat:
      return std::any_of(r.children.begin(), r.children.end(), [](const RegexPtr& c) { return denotes_empty(*c); });
    case RegexKind::Union:
      return std::all_of(r.children.begin(), r.children.end(), [](const RegexPtr& c) { return denotes_empty(*c); });
  }
  return true;
}

namespace {

// Precedence: union 0 < concat 1 < postfix 2.
std::string render(const Regex& r, const Alphabet& alphabet, int context) {
  auto wrap = [&](std::string s, int own) { return own < context ? "(" + s + ")" : s; };
  switch (r.kind) {
    case RegexKind::Empty: return "∅";
    case RegexKind::Epsilon: return "()";
    case RegexKind::Symbol: return alphabet.letter_to_string(r.symbol);
    case RegexKind::Star: {
      const Regex& c = *r.children[0];
      const bool atomic = c.kind == RegexKind::Symbol && alphabet.arity == 1;
      return (atomic ? render(c, alphabet, 2) : "(" + render(c, alphabet, 0) + ")") + "*";
    }
    case RegexKind::Omega: return "(" + render(*r.children[0], alphabet, 0) + ")^w";
    case RegexKind::Concat: {
      std::string out;
      for (std::size_t i = 0; i < r.children.size(); ++i) {
        if (i && alphabet.arity > 1) out += ' ';
        out += render(*r.children[i], alphabet, 1);
      }
      return wrap(out, 1);
    }
    case RegexKind::Union: {
      std::string out;
      for (std::size_t i = 0; i < r.children.size(); ++i) {
        if (i) out += '|';
        out += render(*r.children[i], alphabet, 0);
      }
      return wrap(out, 0);
    }
  }
  return "";
}

}  // namespace

std::string to_string(const Regex& r, const Alphabet& alphabet) { return render(r, alphabet, 0); }

std::string OmegaRegex::str() const {
  return "base " + std::to_string(alphabet.base) + " arity " + std::to_string(alphabet.arity) + ": " +
         to_string(*root, alphabet);
}

namespace {

class Parser {
 public:
  Parser(const Alphabet& alphabet, std::string_view text) : alphabet_(alphabet), text_(text) {}

  RegexPtr parse() {
    RegexPtr r = parse_union();
    skip_ws();
    if (pos_ < text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError(0, what + " at column " + std::to_string(pos_ + 1));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  RegexPtr parse_union() {
    RegexPtr r = parse_concat();
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      r = make_union(r, parse_concat());
      skip_ws();
    }
    return r;
  }

  // Keeps parsed structure (no simplification) except ε absorption.
  static RegexPtr make_union(RegexPtr a, RegexPtr b) {
    std::vector<RegexPtr> parts;
    for (const RegexPtr& x : {a, b}) {
      if (x->kind == RegexKind::Union) parts.insert(parts.end(), x->children.begin(), x->children.end());
      else parts.push_back(x);
    }
    return make(RegexKind::Union, std::move(parts));
  }

  RegexPtr parse_concat() {
    RegexPtr r = re_epsilon();
    while (at_atom_start()) r = re_concat(r, parse_postfix());
    return r;
  }

  RegexPtr parse_postfix() {
    RegexPtr r = parse_atom();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        r = make(RegexKind::Star, {r});
      } else if (text_.substr(pos_, 2) == "^w") {
        pos_ += 2;
        r = make(RegexKind::Omega, {r});
      } else {
        return r;
      }
    }
  }

  RegexPtr parse_atom() {
    skip_ws();
    if (text_[pos_] == '(') {
      ++pos_;
      RegexPtr r = parse_union();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') error("expected ')'");
      ++pos_;
      return r;
    }
    if (alphabet_.arity == 1) {
      const char c = text_[pos_++];
      return re_symbol(parse_letter(alphabet_, std::string_view(&c, 1)));
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
      ++pos_;
    return re_symbol(parse_letter(alphabet_, text_.substr(start, pos_ - start)));
  }

  const Alphabet& alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

enum class Sort { Finite, Infinite };

Sort check_sorts(const Regex& r) {
  switch (r.kind) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
    case RegexKind::Symbol: return Sort::Finite;
    case RegexKind::Star:
      if (check_sorts(*r.children[0]) != Sort::Finite) throw ParseError(0, "star applied to an ω-expression");
      return Sort::Finite;
    case RegexKind::Omega:
      if (check_sorts(*r.children[0]) != Sort::Finite) throw ParseError(0, "nested ω-power");
      if (nullable(*r.children[0]))
        fail(ErrorKind::OmegaArity, "ω-power applied to a language containing the empty word");
      return Sort::Infinite;
    case RegexKind::Concat: {
      for (std::size_t i = 0; i + 1 < r.children.size(); ++i)
        if (check_sorts(*r.children[i]) != Sort::Finite)
          throw ParseError(0, "ω-power must be the rightmost factor of a concatenation");
      return check_sorts(*r.children.back());
    }
    case RegexKind::Union: {
      const Sort first = check_sorts(*r.children[0]);
      for (std::size_t i = 1; i < r.children.size(); ++i)
        if (check_sorts(*r.children[i]) != first) throw ParseError(0, "union mixes finite and ω-branches");
      return first;
    }
  }
  return Sort::Finite;
}

}  // namespace

OmegaRegex parse_omega_regex(const Alphabet& alphabet, std::string_view expression) {
  if (alphabet.base < 2 || alphabet.arity < 1) fail(ErrorKind::Domain, "invalid base/arity");
  RegexPtr root = Parser(alphabet, expression).parse();
  if (check_sorts(*root) != Sort::Infinite)
    throw ParseError(0, "expression denotes finite words; an ω-power is required");
  return {alphabet, root};
}

OmegaRegex parse_omega_regex(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "missing 'base <r> arity <m>:' header");
  std::string_view header = text.substr(0, colon);
  Alphabet alphabet{0, 1};
  std::vector<std::string> words;
  {
    std::size_t p = 0;
    while (p < header.size()) {
      while (p < header.size() && std::isspace(static_cast<unsigned char>(header[p]))) ++p;
      std::size_t e = p;
      while (e < header.size() && !std::isspace(static_cast<unsigned char>(header[e]))) ++e;
      if (e > p) words.emplace_back(header.substr(p, e - p));
      p = e;
    }
  }
  auto number = [](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError(0, "malformed number '" + s + "' in header");
    return std::stoi(s);
  };
  for (std::size_t i = 0; i < words.size(); i += 2) {
    if (i + 1 >= words.size()) throw ParseError(0, "malformed header");
    if (words[i] == "base") alphabet.base = number(words[i + 1]);
    else if (words[i] == "arity") alphabet.arity = number(words[i + 1]);
    else throw ParseError(0, "unknown header key '" + words[i] + "'");
  }
  if (alphabet.base < 2) throw ParseError(0, "header needs 'base <r>' with r >= 2");
  if (alphabet.arity < 1) throw ParseError(0, "arity must be at least 1");
  return parse_omega_regex(alphabet, text.substr(colon + 1));
}

namespace {

class Builder {
 public:
  State add_state() {
    eps_.emplace_back();
    edges_.emplace_back();
    accepting_.push_back(false);
    return static_cast<State>(eps_.size() - 1);
  }

  void compile_finite(const Regex& r, State from, State to) {
    switch (r.kind) {
      case RegexKind::Empty: return;
      case RegexKind::Epsilon: eps_[from].push_back(to); return;
      case RegexKind::Symbol: edges_[from].push_back({r.symbol, to}); return;
      case RegexKind::Concat: {
        State cur = from;
        for (std::size_t i = 0; i < r.children.size(); ++i) {
          const State next = i + 1 == r.children.size() ? to : add_state();
          compile_finite(*r.children[i], cur, next);
          cur = next;
        }
        return;
      }
      case RegexKind::Union:
        for (const auto& c : r.children) compile_finite(*c, from, to);
        return;
      case RegexKind::Star: {
        const State s = add_state();
        const State t = add_state();
        eps_[from].push_back(s);
        compile_finite(*r.children[0], s, t);
        eps_[t].push_back(s);
        eps_[s].push_back(to);
        return;
      }
      case RegexKind::Omega: break;
    }
    throw ParseError(0, "ω-power in finite context");
  }

  void compile_infinite(const Regex& r, State from) {
    switch (r.kind) {
      case RegexKind::Omega: {
        const State hub = add_state();
        accepting_[hub] = true;
        eps_[from].push_back(hub);
        const State back = add_state();
        compile_finite(*r.children[0], hub, back);
        eps_[back].push_back(hub);
        return;
      }
      case RegexKind::Concat: {
        State cur = from;
        for (std::size_t i = 0; i + 1 < r.children.size(); ++i) {
          const State next = add_state();
          compile_finite(*r.children[i], cur, next);
          cur = next;
        }
        compile_infinite(*r.children.back(), cur);
        return;
      }
      case RegexKind::Union:
        for (const auto& c : r.children) compile_infinite(*c, from);
        return;
      default: break;
    }
    throw ParseError(0, "expected an ω-expression");
  }

  // Letter-reading states, accepting states and the start state survive; each
  // surviving p gets p -c-> q whenever p ε* s -c-> q0 ε* q.
  BuchiAutomaton finish(const Alphabet& alphabet, State start) const {
    const std::size_t n = eps_.size();
    std::vector<std::vector<State>> closure(n);
    for (State p = 0; p < n; ++p) {
      std::vector<bool> seen(n, false);
      std::vector<State> work{p};
      seen[p] = true;
      while (!work.empty()) {
        const State v = work.back();
        work.pop_back();
        closure[p].push_back(v);
        for (State w : eps_[v])
          if (!seen[w]) { seen[w] = true; work.push_back(w); }
      }
    }
    std::vector<bool> keep(n, false);
    for (State p = 0; p < n; ++p) keep[p] = p == start || accepting_[p] || !edges_[p].empty();
    std::vector<State> rename(n, 0);
    State next = 0;
    for (State p = 0; p < n; ++p)
      if (keep[p]) rename[p] = next++;

    std::vector<Transition> transitions;
    std::vector<State> accepting;
    for (State p = 0; p < n; ++p) {
      if (!keep[p]) continue;
      if (accepting_[p]) accepting.push_back(rename[p]);
      for (State s : closure[p])
        for (const auto& e : edges_[s])
          for (State q : closure[e.to])
            if (keep[q]) transitions.push_back({rename[p], e.label, rename[q]});
    }
    return trim(BuchiAutomaton(alphabet, next, {rename[start]}, std::move(accepting), std::move(transitions)));
  }

 private:
  std::vector<std::vector<State>> eps_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<bool> accepting_;
};

}  // namespace

BuchiAutomaton regex_to_automaton(const OmegaRegex& e) {
  check_sorts(*e.root);
  Builder b;
  const State start = b.add_state();
  b.compile_infinite(*e.root, start);
  return reduce(b.finish(e.alphabet, start));
}

}  // namespace realreg
