#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ttk/pattern.hpp"

namespace ttk {

inline constexpr std::size_t kDefaultStateLimit = 1'000'000;

// Instrumentation for a single scan.
struct MatchStats {
  std::size_t chars_visited = 0;
};

// Matches many patterns in one left-to-right pass. Patterns are merged into
// position automata that are determinized up front, so a scan costs one
// table lookup per input byte and automaton. Sets whose union DFA would
// exceed a per-automaton budget are split into several DFAs that are
// stepped in lockstep. Immutable after construction.
class MultiMatcher {
 public:
  MultiMatcher() : MultiMatcher(std::span<const Pattern>{}) {}
  // Throws CapacityError if the automaton needs more than state_limit states.
  explicit MultiMatcher(std::span<const Pattern> patterns, std::size_t state_limit = kDefaultStateLimit);

  // Sorted indices of the patterns that match s.
  std::vector<std::size_t> match_set(std::string_view s, MatchStats* stats = nullptr) const;
  // True iff any pattern matches s; stops at the first hit.
  bool match_any(std::string_view s) const;

  std::span<const Pattern> patterns() const noexcept { return patterns_; }
  std::size_t size() const noexcept { return patterns_.size(); }
  std::size_t state_count() const noexcept;
  std::size_t automaton_count() const noexcept { return dfas_.size(); }

  struct Dfa {
    // transitions[state * kSymbolCount + symbol]; state 0 is the start.
    std::vector<std::uint32_t> transitions;
    // Patterns accepting inside state q: accepts[accept_begin[q] .. accept_begin[q+1]).
    std::vector<std::uint32_t> accepts;
    std::vector<std::uint32_t> accept_begin;
    // End-anchored patterns accepting if the input ends in state q.
    std::vector<std::uint32_t> end_accepts;
    std::vector<std::uint32_t> end_accept_begin;

    std::size_t states() const noexcept { return accept_begin.size() - 1; }
  };

 private:
  std::vector<Pattern> patterns_;
  std::vector<Dfa> dfas_;
  // Patterns that match every string.
  std::vector<std::uint32_t> always_;
};

MultiMatcher compile_set(std::span<const Pattern> patterns, std::size_t state_limit = kDefaultStateLimit);

inline std::vector<std::size_t> match_set(const MultiMatcher& m, std::string_view s) { return m.match_set(s); }

}  // namespace ttk
