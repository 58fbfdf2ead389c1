#include <charconv>
#include <optional>
#include <sstream>

#include "realreg/automaton.hpp"
#include "realreg/error.hpp"

namespace realreg {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

long parse_count(std::string_view token, std::size_t line_no, const char* what) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
    throw ParseError(line_no, std::string("malformed ") + what + " '" + std::string(token) + "'");
  return value;
}

}  // namespace

BuchiAutomaton parse_automaton(std::string_view text) {
  std::optional<long> base, arity, states;
  std::optional<std::vector<State>> initial, accepting;
  std::vector<Transition> transitions;
  bool header = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "buchi" || tokens[1] != "v1")
        throw ParseError(line_no, "expected header 'buchi v1'");
      header = true;
      continue;
    }

    const std::string_view key = tokens[0];
    auto once = [&](bool already) {
      if (already) throw ParseError(line_no, "duplicate '" + std::string(key) + "' line");
    };
    auto single = [&](const char* what) {
      if (tokens.size() != 2) throw ParseError(line_no, "'" + std::string(key) + "' takes one value");
      return parse_count(tokens[1], line_no, what);
    };
    auto state_id = [&](std::string_view tok) {
      if (!states) throw ParseError(line_no, "'states' must precede state references");
      const long q = parse_count(tok, line_no, "state id");
      if (q >= *states) throw ParseError(line_no, "state id " + std::string(tok) + " out of range");
      return static_cast<State>(q);
    };

    if (key == "base") {
      once(base.has_value());
      base = single("base");
      if (*base < 2) throw ParseError(line_no, "base must be at least 2");
    } else if (key == "arity") {
      once(arity.has_value());
      arity = single("arity");
      if (*arity < 1) throw ParseError(line_no, "arity must be at least 1");
    } else if (key == "states") {
      once(states.has_value());
      states = single("state count");
      if (*states < 1) throw ParseError(line_no, "state count must be at least 1");
    } else if (key == "initial" || key == "accepting") {
      auto& target = key == "initial" ? initial : accepting;
      once(target.has_value());
      target.emplace();
      for (std::size_t i = 1; i < tokens.size(); ++i) target->push_back(state_id(tokens[i]));
      if (key == "initial" && target->empty()) throw ParseError(line_no, "initial set must be nonempty");
    } else if (key == "trans") {
      if (!base || !arity) throw ParseError(line_no, "'base' and 'arity' must precede transitions");
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'trans <from> <d1,...,dm> <to>'");
      const State from = state_id(tokens[1]);
      const State to = state_id(tokens[3]);
      Letter label;
      try {
        label = parse_letter(Alphabet{static_cast<int>(*base), static_cast<int>(*arity)}, tokens[2]);
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
      } catch (const Error& e) {
        throw Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
      }
      transitions.push_back({from, label, to});
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }

  if (!header) throw ParseError(line_no, "missing 'buchi v1' header");
  if (!base) throw ParseError(line_no, "missing 'base'");
  if (!arity) throw ParseError(line_no, "missing 'arity'");
  if (!states) throw ParseError(line_no, "missing 'states'");
  if (!initial) throw ParseError(line_no, "missing 'initial'");
  if (!accepting) accepting.emplace();
  return BuchiAutomaton(Alphabet{static_cast<int>(*base), static_cast<int>(*arity)},
                        static_cast<std::size_t>(*states), std::move(*initial), std::move(*accepting),
                        std::move(transitions));
}

std::string format_automaton(const BuchiAutomaton& a) {
  std::ostringstream os;
  os << "buchi v1\n"
     << "base " << a.base() << "\n"
     << "arity " << a.arity() << "\n"
     << "states " << a.state_count() << "\n"
     << "initial";
  for (State q : a.initial()) os << ' ' << q;
  os << "\naccepting";
  for (State q : a.accepting()) os << ' ' << q;
  os << '\n';
  for (const auto& t : a.transitions())
    os << "trans " << t.from << ' ' << a.alphabet().letter_to_string(t.label) << ' ' << t.to << '\n';
  return os.str();
}

}  // namespace realreg
