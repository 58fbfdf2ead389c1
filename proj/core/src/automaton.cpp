#include "realreg/automaton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "graph.hpp"
#include "realreg/error.hpp"

namespace realreg {

namespace {

void sort_unique(std::vector<State>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<std::vector<std::uint32_t>> successor_lists(const BuchiAutomaton& a) {
  std::vector<std::vector<std::uint32_t>> succ(a.state_count());
  for (const auto& t : a.transitions()) succ[t.from].push_back(t.to);
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return succ;
}

void require_same_alphabet(const BuchiAutomaton& a, const BuchiAutomaton& b) {
  if (a.base() != b.base())
    fail(ErrorKind::BaseMismatch,
         "bases differ: " + std::to_string(a.base()) + " vs " + std::to_string(b.base()));
  if (a.arity() != b.arity())
    fail(ErrorKind::ArityMismatch,
         "arities differ: " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
}

}  // namespace

BuchiAutomaton::BuchiAutomaton(Alphabet alphabet, std::size_t state_count, std::vector<State> initial,
                               std::vector<State> accepting, std::vector<Transition> transitions)
    : alphabet_(alphabet),
      state_count_(state_count),
      initial_(std::move(initial)),
      accepting_(std::move(accepting)),
      transitions_(std::move(transitions)) {
  if (alphabet_.base < 2) fail(ErrorKind::Domain, "base must be at least 2");
  if (alphabet_.arity < 1) fail(ErrorKind::Domain, "arity must be at least 1");
  if (state_count_ < 1) fail(ErrorKind::Domain, "automaton needs at least one state");
  sort_unique(initial_);
  sort_unique(accepting_);
  if (initial_.empty()) fail(ErrorKind::Domain, "automaton needs an initial state");
  auto check = [&](State q) {
    if (q >= state_count_) fail(ErrorKind::Domain, "state id " + std::to_string(q) + " out of range");
  };
  for (State q : initial_) check(q);
  for (State q : accepting_) check(q);
  const Letter alphabet_size = alphabet_.size();
  for (const auto& t : transitions_) {
    check(t.from);
    check(t.to);
    if (t.label >= alphabet_size) fail(ErrorKind::Domain, "transition label outside the alphabet");
  }
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

  initial_flag_.assign(state_count_, false);
  accepting_flag_.assign(state_count_, false);
  for (State q : initial_) initial_flag_[q] = true;
  for (State q : accepting_) accepting_flag_[q] = true;
  out_.assign(state_count_, {});
  for (const auto& t : transitions_) out_[t.from].push_back({t.label, t.to});
  for (auto& edges : out_)
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.label, x.to) < std::tie(y.label, y.to); });
}

std::vector<bool> useful_states(const BuchiAutomaton& a) {
  const auto succ = successor_lists(a);
  const auto from_initial = detail::reachable(succ, a.initial());
  const auto scc = detail::strongly_connected_components(succ);

  std::vector<std::uint32_t> good;
  for (State q = 0; q < a.state_count(); ++q)
    if (a.is_accepting(q) && scc.nontrivial[scc.component[q]]) good.push_back(q);

  std::vector<std::vector<std::uint32_t>> pred(a.state_count());
  for (State q = 0; q < a.state_count(); ++q)
    for (auto w : succ[q]) pred[w].push_back(q);
  const auto to_good = detail::reachable(pred, good);

  std::vector<bool> useful(a.state_count());
  for (State q = 0; q < a.state_count(); ++q) useful[q] = from_initial[q] && to_good[q];
  return useful;
}

bool is_trim(const BuchiAutomaton& a) {
  const auto useful = useful_states(a);
  return std::all_of(useful.begin(), useful.end(), [](bool b) { return b; });
}

bool is_closed(const BuchiAutomaton& a) {
  return a.accepting().size() == a.state_count() && is_trim(a);
}

BuchiAutomaton trim(const BuchiAutomaton& a) {
  const auto useful = useful_states(a);
  std::vector<State> rename(a.state_count(), 0);
  State next = 0;
  for (State q = 0; q < a.state_count(); ++q)
    if (useful[q]) rename[q] = next++;
  if (next == 0) fail(ErrorKind::EmptyLanguage, "automaton recognizes the empty language");

  std::vector<State> initial, accepting;
  for (State q : a.initial())
    if (useful[q]) initial.push_back(rename[q]);
  for (State q : a.accepting())
    if (useful[q]) accepting.push_back(rename[q]);
  std::vector<Transition> transitions;
  for (const auto& t : a.transitions())
    if (useful[t.from] && useful[t.to]) transitions.push_back({rename[t.from], t.label, rename[t.to]});
  return BuchiAutomaton(a.alphabet(), next, std::move(initial), std::move(accepting), std::move(transitions));
}

BuchiAutomaton close(const BuchiAutomaton& a) {
  if (!is_trim(a)) fail(ErrorKind::NotTrim, "closure requires a trim automaton");
  std::vector<State> all(a.state_count());
  std::iota(all.begin(), all.end(), State{0});
  return BuchiAutomaton(a.alphabet(), a.state_count(), a.initial(), std::move(all), a.transitions());
}

BuchiAutomaton product(const BuchiAutomaton& a, const BuchiAutomaton& b) {
  require_same_alphabet(a, b);
  using Key = std::tuple<State, State, int>;
  std::map<Key, State> ids;
  std::vector<Key> keys;
  auto id_of = [&](const Key& k) {
    auto [it, inserted] = ids.emplace(k, static_cast<State>(keys.size()));
    if (inserted) keys.push_back(k);
    return it->second;
  };

  std::vector<State> initial;
  for (State p : a.initial())
    for (State q : b.initial()) initial.push_back(id_of({p, q, 0}));

  std::vector<Transition> transitions;
  std::vector<State> accepting;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto [p, q, track] = keys[i];
    if (track == 0 && a.is_accepting(p)) accepting.push_back(static_cast<State>(i));
    int next_track = track;
    if (track == 0 && a.is_accepting(p)) next_track = 1;
    else if (track == 1 && b.is_accepting(q)) next_track = 0;
    const auto& ea = a.out(p);
    const auto& eb = b.out(q);
    // Both edge lists are sorted by label; merge on equal labels.
    std::size_t ib = 0;
    for (std::size_t ia = 0; ia < ea.size(); ++ia) {
      while (ib < eb.size() && eb[ib].label < ea[ia].label) ++ib;
      for (std::size_t jb = ib; jb < eb.size() && eb[jb].label == ea[ia].label; ++jb) {
        const State target = id_of({ea[ia].to, eb[jb].to, next_track});
        transitions.push_back({static_cast<State>(i), ea[ia].label, target});
      }
    }
  }
  return BuchiAutomaton(a.alphabet(), keys.size(), std::move(initial), std::move(accepting),
                        std::move(transitions));
}

BuchiAutomaton disjoint_union(const BuchiAutomaton& a, const BuchiAutomaton& b) {
  require_same_alphabet(a, b);
  const auto offset = static_cast<State>(a.state_count());
  std::vector<State> initial = a.initial(), accepting = a.accepting();
  std::vector<Transition> transitions = a.transitions();
  for (State q : b.initial()) initial.push_back(q + offset);
  for (State q : b.accepting()) accepting.push_back(q + offset);
  for (const auto& t : b.transitions()) transitions.push_back({t.from + offset, t.label, t.to + offset});
  return BuchiAutomaton(a.alphabet(), a.state_count() + b.state_count(), std::move(initial),
                        std::move(accepting), std::move(transitions));
}

BuchiAutomaton project(const BuchiAutomaton& a, int coordinate) {
  if (coordinate < 1 || coordinate > a.arity())
    fail(ErrorKind::IndexOutOfRange, "coordinate " + std::to_string(coordinate) + " outside 1.." +
                                         std::to_string(a.arity()));
  std::vector<Transition> transitions;
  transitions.reserve(a.transitions().size());
  for (const auto& t : a.transitions())
    transitions.push_back({t.from, static_cast<Letter>(a.alphabet().digit(t.label, coordinate - 1)), t.to});
  return BuchiAutomaton(Alphabet{a.base(), 1}, a.state_count(), a.initial(), a.accepting(),
                        std::move(transitions));
}

BuchiAutomaton full_automaton(int base, int arity) {
  const Alphabet alphabet{base, arity};
  std::vector<Transition> transitions;
  for (Letter c = 0; c < alphabet.size(); ++c) transitions.push_back({0, c, 0});
  return BuchiAutomaton(alphabet, 1, {0}, {0}, std::move(transitions));
}

bool accepts_lasso(const BuchiAutomaton& a, const LassoWord& w) {
  if (w.cycle.empty()) fail(ErrorKind::Domain, "lasso cycle must be nonempty");
  const Letter alphabet_size = a.alphabet().size();
  for (const Word* part : {&w.spoke, &w.cycle})
    for (Letter c : *part)
      if (c >= alphabet_size) fail(ErrorKind::Domain, "lasso letter outside the automaton alphabet");

  const std::size_t spoke = w.spoke.size();
  const std::size_t length = spoke + w.cycle.size();
  auto letter_at = [&](std::size_t pos) { return pos < spoke ? w.spoke[pos] : w.cycle[pos - spoke]; };
  auto node = [&](State q, std::size_t pos) { return static_cast<std::uint32_t>(q * length + pos); };

  std::vector<std::vector<std::uint32_t>> succ(a.state_count() * length);
  for (State q = 0; q < a.state_count(); ++q) {
    for (std::size_t pos = 0; pos < length; ++pos) {
      const Letter c = letter_at(pos);
      const std::size_t next = pos + 1 < length ? pos + 1 : spoke;
      for (const auto& e : a.out(q))
        if (e.label == c) succ[node(q, pos)].push_back(node(e.to, next));
    }
  }
  std::vector<std::uint32_t> sources;
  for (State q : a.initial()) sources.push_back(node(q, 0));
  const auto live = detail::reachable(succ, sources);
  for (std::size_t v = 0; v < succ.size(); ++v)
    if (!live[v]) succ[v].clear();
  const auto scc = detail::strongly_connected_components(succ);
  for (std::size_t v = 0; v < succ.size(); ++v) {
    if (!live[v]) continue;
    const State q = static_cast<State>(v / length);
    if (a.is_accepting(q) && scc.nontrivial[scc.component[v]]) return true;
  }
  return false;
}

std::vector<BigInt> prefix_counts(const BuchiAutomaton& a, std::size_t n_max) {
  if (!is_trim(a)) fail(ErrorKind::NotTrim, "prefix counting requires a trim automaton");
  std::map<std::vector<State>, BigInt> level;
  level.emplace(a.initial(), BigInt(1));
  std::vector<BigInt> counts;
  counts.reserve(n_max + 1);
  for (std::size_t n = 0;; ++n) {
    BigInt total = 0;
    for (const auto& [subset, count] : level) total += count;
    counts.push_back(total);
    if (n == n_max) break;
    std::map<std::vector<State>, BigInt> next;
    std::map<Letter, std::vector<State>> by_letter;
    for (const auto& [subset, count] : level) {
      by_letter.clear();
      for (State q : subset)
        for (const auto& e : a.out(q)) by_letter[e.label].push_back(e.to);
      for (auto& [letter, targets] : by_letter) {
        sort_unique(targets);
        next[targets] += count;
      }
    }
    level = std::move(next);
  }
  return counts;
}

BigInt prefix_count(const BuchiAutomaton& a, std::size_t n) { return prefix_counts(a, n).back(); }

namespace {

// sim[q][p]: p directly simulates q.
std::vector<std::vector<bool>> direct_simulation(const BuchiAutomaton& a) {
  const std::size_t n = a.state_count();
  std::vector<std::vector<bool>> sim(n, std::vector<bool>(n));
  for (State q = 0; q < n; ++q)
    for (State p = 0; p < n; ++p) sim[q][p] = !a.is_accepting(q) || a.is_accepting(p);
  for (bool changed = true; changed;) {
    changed = false;
    for (State q = 0; q < n; ++q)
      for (State p = 0; p < n; ++p) {
        if (!sim[q][p]) continue;
        for (const auto& e : a.out(q)) {
          const bool matched = std::any_of(a.out(p).begin(), a.out(p).end(), [&](const Edge& f) {
            return f.label == e.label && sim[e.to][f.to];
          });
          if (!matched) {
            sim[q][p] = false;
            changed = true;
            break;
          }
        }
      }
  }
  return sim;
}

}  // namespace

BuchiAutomaton reduce(const BuchiAutomaton& a) {
  auto sim = direct_simulation(a);
  const std::size_t n = a.state_count();
  std::vector<State> cls(n, 0);
  std::size_t classes = 0;
  std::vector<bool> assigned(n);
  for (State q = 0; q < n; ++q) {
    if (assigned[q]) continue;
    for (State p = q; p < n; ++p)
      if (!assigned[p] && sim[q][p] && sim[p][q]) {
        cls[p] = static_cast<State>(classes);
        assigned[p] = true;
      }
    ++classes;
  }
  std::vector<State> initial, accepting;
  std::vector<Transition> transitions;
  for (State q : a.initial()) initial.push_back(cls[q]);
  for (State q : a.accepting()) accepting.push_back(cls[q]);
  for (const auto& t : a.transitions()) transitions.push_back({cls[t.from], t.label, cls[t.to]});
  const BuchiAutomaton merged(a.alphabet(), classes, initial, accepting, transitions);

  sim = direct_simulation(merged);
  const auto dominated = [&](State q, const auto& siblings) {
    return std::any_of(siblings.begin(), siblings.end(), [&](State p) { return p != q && sim[q][p]; });
  };
  initial.clear();
  for (State q : merged.initial())
    if (!dominated(q, merged.initial())) initial.push_back(q);
  transitions.clear();
  for (State q = 0; q < classes; ++q)
    for (const auto& e : merged.out(q)) {
      std::vector<State> siblings;
      for (const auto& f : merged.out(q))
        if (f.label == e.label) siblings.push_back(f.to);
      if (!dominated(e.to, siblings)) transitions.push_back({q, e.label, e.to});
    }
  const BuchiAutomaton pruned(merged.alphabet(), classes, initial, merged.accepting(), transitions);
  const auto useful = useful_states(pruned);
  if (std::none_of(useful.begin(), useful.end(), [](bool u) { return u; })) return pruned;
  return trim(pruned);
}

}  // namespace realreg
