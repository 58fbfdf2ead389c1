#include "realreg/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "graph.hpp"
#include "realreg/analysis.hpp"
#include "realreg/error.hpp"

namespace realreg {

// ---------------------------------------------------------------------------
// V·W^ω decomposition

namespace {

/// Generalized automaton with regex labels; nodes 0..n−1 are automaton
/// states, n is the source and n+1 the sink.
class EliminationTable {
 public:
  explicit EliminationTable(const BuchiAutomaton& a)
      : n_(a.state_count()), table_(n_ + 2, std::vector<RegexPtr>(n_ + 2, re_empty())) {
    for (const auto& t : a.transitions()) add(t.from, t.to, re_symbol(t.label));
  }

  std::size_t source() const { return n_; }
  std::size_t sink() const { return n_ + 1; }

  void add(std::size_t i, std::size_t j, RegexPtr r) { table_[i][j] = re_union(table_[i][j], std::move(r)); }

  /// Eliminates every automaton state in ascending id order and returns the
  /// label of source → sink.
  RegexPtr solve() {
    std::vector<bool> gone(n_ + 2, false);
    for (std::size_t k = 0; k < n_; ++k) {
      const RegexPtr loop = re_star(table_[k][k]);
      for (std::size_t i = 0; i < n_ + 2; ++i) {
        if (gone[i] || i == k || table_[i][k]->kind == RegexKind::Empty) continue;
        const RegexPtr head = re_concat(table_[i][k], loop);
        for (std::size_t j = 0; j < n_ + 2; ++j) {
          if (gone[j] || j == k || table_[k][j]->kind == RegexKind::Empty) continue;
          add(i, j, re_concat(head, table_[k][j]));
        }
      }
      gone[k] = true;
    }
    return table_[source()][sink()];
  }

 private:
  std::size_t n_;
  std::vector<std::vector<RegexPtr>> table_;
};

}  // namespace

OmegaRegex VWDecomposition::to_regex() const {
  RegexPtr root = re_empty();
  for (const auto& c : components) root = re_union(root, re_concat(c.prefix, re_omega(c.period)));
  return {alphabet, root};
}

OmegaRegex VWDecomposition::component_regex(std::size_t i) const {
  const auto& c = components.at(i);
  return {alphabet, re_concat(c.prefix, re_omega(c.period))};
}

VWDecomposition vw_decompose(const BuchiAutomaton& input) {
  const BuchiAutomaton a = is_trim(input) ? input : trim(input);
  VWDecomposition out{a.alphabet(), {}};
  for (State q : a.accepting()) {
    EliminationTable prefix_table(a);
    for (State i : a.initial()) prefix_table.add(prefix_table.source(), i, re_epsilon());
    prefix_table.add(q, prefix_table.sink(), re_epsilon());

    EliminationTable period_table(a);
    for (const auto& e : a.out(q)) period_table.add(period_table.source(), e.to, re_symbol(e.label));
    for (const auto& t : a.transitions()) {
      if (t.to != q) continue;
      period_table.add(t.from, period_table.sink(), re_symbol(t.label));
      if (t.from == q) period_table.add(period_table.source(), period_table.sink(), re_symbol(t.label));
    }

    RegexPtr period = period_table.solve();
    if (denotes_empty(*period)) continue;  // q is not on a cycle
    out.components.push_back({q, prefix_table.solve(), std::move(period)});
  }
  if (out.components.empty()) fail(ErrorKind::EmptyLanguage, "no accepting state lies on a cycle");
  return out;
}

// ---------------------------------------------------------------------------
// Chains

Chain::Chain(std::vector<Word> prefixes_in, std::vector<Word> loops_in)
    : prefixes(std::move(prefixes_in)), loops(std::move(loops_in)) {
  if (prefixes.size() != loops.size() || loops.empty())
    fail(ErrorKind::Domain, "chain needs matching nonempty prefix and loop lists");
  for (const auto& v : loops)
    if (v.empty()) fail(ErrorKind::Domain, "chain loop words must be nonempty");
}

LassoWord Chain::instantiate(const std::vector<std::size_t>& exponents) const {
  if (exponents.size() != star_count()) fail(ErrorKind::Domain, "wrong number of star exponents");
  LassoWord w;
  for (std::size_t i = 0; i < depth(); ++i) {
    w.spoke.insert(w.spoke.end(), prefixes[i].begin(), prefixes[i].end());
    if (i + 1 == depth()) break;
    for (std::size_t k = 0; k < exponents[i]; ++k) w.spoke.insert(w.spoke.end(), loops[i].begin(), loops[i].end());
  }
  w.cycle = loops.back();
  return w;
}

OmegaRegex SparseNormalForm::to_regex() const {
  RegexPtr root = re_empty();
  for (const auto& c : chains) {
    RegexPtr r = re_epsilon();
    for (std::size_t i = 0; i < c.depth(); ++i) {
      r = re_concat(r, re_word(c.prefixes[i]));
      r = re_concat(r, i + 1 == c.depth() ? re_omega(re_word(c.loops[i])) : re_star(re_word(c.loops[i])));
    }
    root = re_union(root, r);
  }
  return {alphabet, root};
}

SparseNormalForm canonicalize(SparseNormalForm f) {
  for (auto& c : f.chains) c.loops.back() = primitive_root(c.loops.back());
  std::sort(f.chains.begin(), f.chains.end());
  f.chains.erase(std::unique(f.chains.begin(), f.chains.end()), f.chains.end());
  return f;
}

namespace {

Word periodic_prefix(const Word& period, std::size_t start, std::size_t length) {
  Word w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) w.push_back(period[(start + i) % period.size()]);
  return w;
}

void append(Word& w, const Word& tail) { w.insert(w.end(), tail.begin(), tail.end()); }

/// Words of paths p → q inside one component: a finite word when `loop` is
/// empty, otherwise the family prefix·loop*.
struct Segment {
  Word prefix;
  Word loop;
};

class ChainExtractor {
 public:
  ChainExtractor(const BuchiAutomaton& a, std::size_t cap) : a_(a), cap_(cap) {
    succ_.resize(a.state_count());
    for (const auto& t : a.transitions()) succ_[t.from].push_back(t.to);
    for (auto& s : succ_) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    scc_ = detail::strongly_connected_components(succ_);
    accepting_component_.assign(scc_.count, false);
    for (State q : a.accepting()) accepting_component_[scc_.component[q]] = true;
    members_.resize(scc_.count);
    for (State q = 0; q < a.state_count(); ++q) members_[scc_.component[q]].push_back(q);
    cycle_word_.resize(a.state_count());
    segments_.resize(a.state_count());
    computed_.assign(a.state_count(), false);
  }

  std::vector<Chain> run() {
    for (State i : a_.initial()) explore(i, {}, {}, {});
    return std::move(chains_);
  }

 private:
  bool same(State p, State q) const { return scc_.component[p] == scc_.component[q]; }
  bool cyclic(State p) const { return scc_.nontrivial[scc_.component[p]]; }

  // Label of a shortest cycle at p inside its component.
  Word shortest_cycle(State p) const {
    std::map<State, std::pair<State, Letter>> parent;
    std::vector<State> frontier;
    for (const auto& e : a_.out(p)) {
      if (!same(p, e.to)) continue;
      if (e.to == p) return {e.label};
      if (parent.emplace(e.to, std::make_pair(p, e.label)).second) frontier.push_back(e.to);
    }
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      const State v = frontier[k];
      for (const auto& e : a_.out(v)) {
        if (!same(p, e.to)) continue;
        if (e.to == p) {
          Word w{e.label};
          for (State x = v; x != p;) {
            const auto [prev, label] = parent.at(x);
            w.push_back(label);
            x = prev;
          }
          std::reverse(w.begin(), w.end());
          return w;
        }
        if (parent.emplace(e.to, std::make_pair(v, e.label)).second) frontier.push_back(e.to);
      }
    }
    fail(ErrorKind::Domain, "state is not on a cycle");
  }

  // Lengths of in-component paths from p are read off the eventually
  // periodic sequence of reachable state sets; the words themselves are
  // prefixes of cycle_word(p)^ω because the component is sparse.
  void compute_segments(State p) {
    computed_[p] = true;
    auto& out = segments_[p];
    if (!cyclic(p)) {
      out[p].push_back({{}, {}});
      return;
    }
    const Word cycle = primitive_root(shortest_cycle(p));
    cycle_word_[p] = cycle;

    std::vector<std::vector<State>> levels{{p}};
    std::map<std::vector<State>, std::size_t> seen{{levels[0], 0}};
    std::size_t threshold = 0, period = 0;
    while (true) {
      std::vector<State> next;
      for (State v : levels.back())
        for (State w : succ_[v])
          if (same(p, w)) next.push_back(w);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (auto it = seen.find(next); it != seen.end()) {
        threshold = it->second;
        period = levels.size() - it->second;
        break;
      }
      seen.emplace(next, levels.size());
      levels.push_back(std::move(next));
    }
    const std::size_t step = std::lcm(period, cycle.size());
    for (std::size_t length = 0; length < threshold; ++length)
      for (State q : levels[length]) out[q].push_back({periodic_prefix(cycle, 0, length), {}});
    for (std::size_t i = 0; i < step; ++i) {
      const std::size_t length = threshold + i;
      for (State q : levels[threshold + i % period])
        out[q].push_back({periodic_prefix(cycle, 0, length), periodic_prefix(cycle, length, step)});
    }
  }

  void explore(State entry, std::vector<Word> prefixes, std::vector<Word> loops, Word pending) {
    if (++work_ > cap_ * 16) fail(ErrorKind::ResourceLimit, "chain enumeration exceeded the work cap");
    if (!computed_[entry]) compute_segments(entry);
    const auto component = scc_.component[entry];
    if (scc_.nontrivial[component] && accepting_component_[component]) {
      auto p = prefixes;
      auto l = loops;
      p.push_back(pending);
      l.push_back(cycle_word_[entry]);
      chains_.emplace_back(std::move(p), std::move(l));
      if (chains_.size() > cap_) fail(ErrorKind::ResourceLimit, "chain count exceeded the cap");
    }
    for (State q : members_[component]) {
      const auto it = segments_[entry].find(q);
      if (it == segments_[entry].end()) continue;
      for (const auto& e : a_.out(q)) {
        if (same(q, e.to)) continue;
        for (const auto& seg : it->second) {
          auto p = prefixes;
          auto l = loops;
          Word w = pending;
          append(w, seg.prefix);
          if (!seg.loop.empty()) {
            p.push_back(std::move(w));
            l.push_back(seg.loop);
            w.clear();
          }
          w.push_back(e.label);
          explore(e.to, std::move(p), std::move(l), std::move(w));
        }
      }
    }
  }

  const BuchiAutomaton& a_;
  std::size_t cap_;
  std::size_t work_ = 0;
  std::vector<std::vector<std::uint32_t>> succ_;
  detail::SccResult scc_;
  std::vector<bool> accepting_component_;
  std::vector<std::vector<State>> members_;
  std::vector<Word> cycle_word_;
  std::vector<std::map<State, std::vector<Segment>>> segments_;
  std::vector<bool> computed_;
  std::vector<Chain> chains_;
};

}  // namespace

SparseNormalForm sparse_normal_form(const BuchiAutomaton& input, std::size_t chain_cap) {
  const BuchiAutomaton a = is_trim(input) ? input : trim(input);
  if (find_nonsparse_witness(a)) fail(ErrorKind::NotSparse, "automaton is not sparse");
  return canonicalize({a.alphabet(), ChainExtractor(a, chain_cap).run()});
}

SparseNormalForm normalize_cycle_lengths(const SparseNormalForm& f) {
  SparseNormalForm out{f.alphabet, {}};
  for (const auto& chain : f.chains) {
    std::size_t n = 1;
    for (const auto& v : chain.loops) n = std::lcm(n, v.size());
    std::vector<Word> loops;
    for (const auto& v : chain.loops) {
      Word powered;
      for (std::size_t k = 0; k < n / v.size(); ++k) append(powered, v);
      loops.push_back(std::move(powered));
    }
    // Fan every starred prefix over u_i v_i^{a_i}; the ω-segment needs no
    // fanning because u_d v_d^a v_d^ω = u_d v_d^ω.
    std::vector<std::size_t> choice(chain.star_count(), 0);
    while (true) {
      std::vector<Word> prefixes = chain.prefixes;
      for (std::size_t i = 0; i < choice.size(); ++i)
        for (std::size_t k = 0; k < choice[i]; ++k) append(prefixes[i], chain.loops[i]);
      out.chains.emplace_back(std::move(prefixes), loops);
      std::size_t i = 0;
      for (; i < choice.size(); ++i) {
        if (++choice[i] < n / chain.loops[i].size()) break;
        choice[i] = 0;
      }
      if (i == choice.size()) break;
    }
  }
  std::sort(out.chains.begin(), out.chains.end());
  out.chains.erase(std::unique(out.chains.begin(), out.chains.end()), out.chains.end());
  return out;
}

SparseNormalForm sparse_closure(const SparseNormalForm& f) {
  SparseNormalForm out{f.alphabet, {}};
  for (const auto& chain : f.chains) {
    for (std::size_t j = 1; j <= chain.depth(); ++j) {
      out.chains.emplace_back(std::vector<Word>(chain.prefixes.begin(), chain.prefixes.begin() + static_cast<std::ptrdiff_t>(j)),
                              std::vector<Word>(chain.loops.begin(), chain.loops.begin() + static_cast<std::ptrdiff_t>(j)));
    }
  }
  return canonicalize(std::move(out));
}

// ---------------------------------------------------------------------------
// Text format

std::string format_normal_form(const SparseNormalForm& f) {
  std::ostringstream os;
  os << "nf v1\nbase " << f.alphabet.base << "\narity " << f.alphabet.arity << '\n';
  for (const auto& c : f.chains) {
    os << "chain ";
    for (std::size_t i = 0; i < c.depth(); ++i) {
      os << '(' << f.alphabet.word_to_string(c.prefixes[i]) << ")(" << f.alphabet.word_to_string(c.loops[i]) << ')'
         << (i + 1 == c.depth() ? "^w" : "*");
    }
    os << '\n';
  }
  return os.str();
}

namespace {

Chain parse_chain_line(const Alphabet& alphabet, std::string_view body, std::size_t line_no) {
  std::vector<Word> prefixes, loops;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t' || body[pos] == '\r')) ++pos;
  };
  bool finished = false;
  while (true) {
    skip();
    if (pos >= body.size()) break;
    if (finished) throw ParseError(line_no, "text after the ω-segment");
    Word group[2];
    for (int g = 0; g < 2; ++g) {
      skip();
      if (pos >= body.size() || body[pos] != '(') throw ParseError(line_no, "expected '(' in chain");
      const auto close = body.find(')', pos);
      if (close == std::string_view::npos) throw ParseError(line_no, "unbalanced '(' in chain");
      try {
        group[g] = parse_word(alphabet, body.substr(pos + 1, close - pos - 1));
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
      }
      pos = close + 1;
    }
    if (body.substr(pos, 1) == "*") {
      pos += 1;
    } else if (body.substr(pos, 2) == "^w") {
      pos += 2;
      finished = true;
    } else {
      throw ParseError(line_no, "loop group must be followed by '*' or '^w'");
    }
    if (group[1].empty()) throw ParseError(line_no, "chain loop words must be nonempty");
    prefixes.push_back(std::move(group[0]));
    loops.push_back(std::move(group[1]));
  }
  if (!finished) throw ParseError(line_no, "chain must end with an ω-segment");
  return Chain(std::move(prefixes), std::move(loops));
}

}  // namespace

SparseNormalForm parse_normal_form(std::string_view text) {
  SparseNormalForm f{{0, 1}, {}};
  bool header = false;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header) {
      if (line != "nf v1") throw ParseError(line_no, "expected header 'nf v1'");
      header = true;
      continue;
    }
    const auto space = line.find(' ');
    const std::string_view key = line.substr(0, space);
    const std::string_view rest = space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);
    if (key == "base" || key == "arity") {
      int value = 0;
      try {
        value = std::stoi(std::string(rest));
      } catch (const std::exception&) {
        throw ParseError(line_no, "malformed number");
      }
      (key == "base" ? f.alphabet.base : f.alphabet.arity) = value;
    } else if (key == "chain") {
      if (f.alphabet.base < 2 || f.alphabet.arity < 1) throw ParseError(line_no, "'base' and 'arity' must precede chains");
      f.chains.push_back(parse_chain_line(f.alphabet, rest, line_no));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!header) throw ParseError(line_no, "missing 'nf v1' header");
  if (f.alphabet.base < 2) throw ParseError(line_no, "missing 'base'");
  return f;
}

}  // namespace realreg
