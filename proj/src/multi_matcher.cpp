#include "ttk/multi_matcher.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "ttk/errors.hpp"

namespace ttk {

namespace {

using StateSet = std::vector<std::uint32_t>;

struct SetHash {
  std::size_t operator()(const StateSet& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t v : s) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Position automaton for the union of all patterns. Global state g is a
// position inside one pattern; the epsilon closure of g is the contiguous
// range [g, close_end[g]].
struct UnionNfa {
  std::vector<std::uint32_t> owner;      // pattern index
  std::vector<std::uint32_t> close_end;  // last state of the closure
  std::vector<Atom> atom;                // unused for accepting states
  std::vector<char> accepting;
  std::vector<std::uint32_t> starts_anchored;
  std::vector<std::uint32_t> starts_free;

  explicit UnionNfa(std::span<const Pattern> patterns) {
    for (std::uint32_t pid = 0; pid < patterns.size(); ++pid) {
      const auto& atoms = patterns[pid].atoms;
      const auto base = static_cast<std::uint32_t>(owner.size());
      (patterns[pid].anchored_start ? starts_anchored : starts_free).push_back(base);
      for (std::size_t j = 0; j <= atoms.size(); ++j) {
        owner.push_back(pid);
        atom.push_back(j < atoms.size() ? atoms[j] : Atom{});
        accepting.push_back(j == atoms.size());
        close_end.push_back(0);
      }
      std::uint32_t end = base + static_cast<std::uint32_t>(atoms.size());
      close_end[end] = end;
      for (std::size_t j = atoms.size(); j-- > 0;) {
        const auto g = base + static_cast<std::uint32_t>(j);
        close_end[g] = atoms[j].optional() ? close_end[g + 1] : g;
      }
    }
  }

  std::size_t size() const { return owner.size(); }

  template <typename F>
  void for_each_closed(std::uint32_t g, F&& f) const {
    for (std::uint32_t t = g; t <= close_end[g]; ++t) f(t);
  }

  // Calls f(symbol, target) for every closed target reachable from g by one byte.
  template <typename F>
  void for_each_move(std::uint32_t g, F&& f) const {
    if (accepting[g]) return;
    const Atom& a = atom[g];
    auto emit = [&](int sym) {
      for_each_closed(g + 1, [&](std::uint32_t t) { f(sym, t); });
      if (a.repeats()) for_each_closed(g, [&](std::uint32_t t) { f(sym, t); });
    };
    if (a.any) {
      for (int sym = 0; sym < kAlphabetSize; ++sym) emit(sym);
    } else {
      emit(symbol_of(a.ch));
    }
  }
};

// Determinizes the union of `patterns` (global ids offset by `base`).
// Returns false, leaving `dfa` unspecified, once more than `budget` states
// would be needed.
bool build_dfa(std::span<const Pattern> patterns, std::uint32_t base, std::size_t budget, MultiMatcher::Dfa& dfa,
               std::vector<std::uint32_t>& always) {
  const UnionNfa nfa(patterns);

  // States that are live before every byte of an unanchored scan. They are
  // left implicit in the subset keys.
  std::vector<char> in_free(nfa.size(), 0);
  for (std::uint32_t s : nfa.starts_free) nfa.for_each_closed(s, [&](std::uint32_t t) { in_free[t] = 1; });
  std::vector<std::uint32_t> local_always;
  for (std::uint32_t g = 0; g < nfa.size(); ++g) {
    if (in_free[g] && nfa.accepting[g]) local_always.push_back(base + nfa.owner[g]);
  }

  std::vector<std::uint32_t> stamp(nfa.size(), 0);
  std::uint32_t epoch = 0;

  // Moves shared by every subset, from the implicit free states.
  std::vector<StateSet> free_moves(kSymbolCount);
  for (std::uint32_t g = 0; g < nfa.size(); ++g) {
    if (!in_free[g]) continue;
    nfa.for_each_move(g, [&](int sym, std::uint32_t t) {
      if (!in_free[t]) free_moves[static_cast<std::size_t>(sym)].push_back(t);
    });
  }
  for (auto& fm : free_moves) {
    std::sort(fm.begin(), fm.end());
    fm.erase(std::unique(fm.begin(), fm.end()), fm.end());
  }

  std::unordered_map<StateSet, std::uint32_t, SetHash> index;
  std::vector<const StateSet*> subsets;
  std::deque<std::uint32_t> pending;
  bool overflow = false;

  auto intern = [&](StateSet&& set) -> std::uint32_t {
    auto [it, inserted] = index.try_emplace(std::move(set), static_cast<std::uint32_t>(subsets.size()));
    if (inserted) {
      if (subsets.size() >= budget) overflow = true;
      subsets.push_back(&it->first);
      pending.push_back(it->second);
    }
    return it->second;
  };

  StateSet initial;
  ++epoch;
  for (std::uint32_t s : nfa.starts_anchored) {
    nfa.for_each_closed(s, [&](std::uint32_t t) {
      if (!in_free[t] && stamp[t] != epoch) {
        stamp[t] = epoch;
        initial.push_back(t);
      }
    });
  }
  std::sort(initial.begin(), initial.end());
  intern(std::move(initial));

  auto& transitions = dfa.transitions;
  transitions.clear();
  std::vector<StateSet> buckets(kSymbolCount);
  while (!pending.empty()) {
    if (overflow) return false;
    const std::uint32_t q = pending.front();
    pending.pop_front();
    // Subsets are interned in BFS order, so q equals the number of rows filled.
    transitions.resize((static_cast<std::size_t>(q) + 1) * kSymbolCount);

    for (auto& b : buckets) b.clear();
    for (std::uint32_t g : *subsets[q]) {
      nfa.for_each_move(g, [&](int sym, std::uint32_t t) {
        if (!in_free[t]) buckets[static_cast<std::size_t>(sym)].push_back(t);
      });
    }
    for (int sym = 0; sym < kSymbolCount; ++sym) {
      const auto& moved = buckets[static_cast<std::size_t>(sym)];
      const auto& shared = free_moves[static_cast<std::size_t>(sym)];
      StateSet next;
      next.reserve(moved.size() + shared.size());
      ++epoch;
      for (const auto* src : {&moved, &shared}) {
        for (std::uint32_t t : *src) {
          if (stamp[t] != epoch) {
            stamp[t] = epoch;
            next.push_back(t);
          }
        }
      }
      std::sort(next.begin(), next.end());
      transitions[static_cast<std::size_t>(q) * kSymbolCount + static_cast<std::size_t>(sym)] =
          intern(std::move(next));
    }
  }
  if (overflow) return false;

  dfa.accepts.clear();
  dfa.end_accepts.clear();
  dfa.accept_begin.assign(1, 0);
  dfa.end_accept_begin.assign(1, 0);
  for (const StateSet* set : subsets) {
    for (std::uint32_t g : *set) {
      if (!nfa.accepting[g]) continue;
      const std::uint32_t pid = nfa.owner[g];
      (patterns[pid].anchored_end ? dfa.end_accepts : dfa.accepts).push_back(base + pid);
    }
    dfa.accept_begin.push_back(static_cast<std::uint32_t>(dfa.accepts.size()));
    dfa.end_accept_begin.push_back(static_cast<std::uint32_t>(dfa.end_accepts.size()));
  }
  always.insert(always.end(), local_always.begin(), local_always.end());
  return true;
}

// States per DFA before a pattern range is split in two.
constexpr std::size_t kSplitBudget = 4096;

}  // namespace

MultiMatcher::MultiMatcher(std::span<const Pattern> patterns, std::size_t state_limit)
    : patterns_(patterns.begin(), patterns.end()) {
  std::size_t used = 0;
  auto fail = [&] {
    throw CapacityError("combined automaton exceeds " + std::to_string(state_limit) + " states");
  };
  // Builds [lo, hi) as one DFA if it fits the split budget, else halves it.
  auto build = [&](auto& self, std::size_t lo, std::size_t hi) -> void {
    const std::size_t remaining = state_limit - used;
    const bool single = hi - lo <= 1;
    const std::size_t budget = single ? remaining : std::min(kSplitBudget, remaining);
    const std::span<const Pattern> part(patterns_.data() + lo, hi - lo);
    Dfa dfa;
    if (build_dfa(part, static_cast<std::uint32_t>(lo), budget, dfa, always_)) {
      used += dfa.states();
      dfas_.push_back(std::move(dfa));
      return;
    }
    if (single || budget == remaining) fail();
    const std::size_t mid = lo + (hi - lo) / 2;
    self(self, lo, mid);
    self(self, mid, hi);
  };
  build(build, 0, patterns_.size());
  std::sort(always_.begin(), always_.end());
}

std::size_t MultiMatcher::state_count() const noexcept {
  std::size_t n = 0;
  for (const auto& d : dfas_) n += d.states();
  return n;
}

std::vector<std::size_t> MultiMatcher::match_set(std::string_view s, MatchStats* stats) const {
  std::vector<std::size_t> out(always_.begin(), always_.end());
  std::vector<std::uint32_t> state(dfas_.size(), 0);
  auto collect = [&](const std::vector<std::uint32_t>& list, const std::vector<std::uint32_t>& begin,
                     std::uint32_t q) {
    for (std::uint32_t i = begin[q]; i < begin[q + 1]; ++i) out.push_back(list[i]);
  };
  for (std::size_t d = 0; d < dfas_.size(); ++d) collect(dfas_[d].accepts, dfas_[d].accept_begin, 0);
  for (char c : s) {
    const auto sym = static_cast<std::size_t>(symbol_of(c));
    for (std::size_t d = 0; d < dfas_.size(); ++d) {
      const Dfa& dfa = dfas_[d];
      state[d] = dfa.transitions[static_cast<std::size_t>(state[d]) * kSymbolCount + sym];
      collect(dfa.accepts, dfa.accept_begin, state[d]);
    }
  }
  if (stats) stats->chars_visited += s.size();
  for (std::size_t d = 0; d < dfas_.size(); ++d) collect(dfas_[d].end_accepts, dfas_[d].end_accept_begin, state[d]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool MultiMatcher::match_any(std::string_view s) const {
  if (!always_.empty()) return true;
  auto accepting = [](const Dfa& dfa, std::uint32_t q) { return dfa.accept_begin[q] != dfa.accept_begin[q + 1]; };
  std::vector<std::uint32_t> state(dfas_.size(), 0);
  for (const Dfa& dfa : dfas_) {
    if (accepting(dfa, 0)) return true;
  }
  for (char c : s) {
    const auto sym = static_cast<std::size_t>(symbol_of(c));
    for (std::size_t d = 0; d < dfas_.size(); ++d) {
      const Dfa& dfa = dfas_[d];
      state[d] = dfa.transitions[static_cast<std::size_t>(state[d]) * kSymbolCount + sym];
      if (accepting(dfa, state[d])) return true;
    }
  }
  for (std::size_t d = 0; d < dfas_.size(); ++d) {
    if (dfas_[d].end_accept_begin[state[d]] != dfas_[d].end_accept_begin[state[d] + 1]) return true;
  }
  return false;
}

MultiMatcher compile_set(std::span<const Pattern> patterns, std::size_t state_limit) {
  return MultiMatcher(patterns, state_limit);
}

}  // namespace ttk
