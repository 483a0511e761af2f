#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "ttk/multi_matcher.hpp"
#include "ttk/pattern.hpp"

namespace ttk {

// A disjunction of patterns: an event is positive iff any pattern matches.
// Patterns are deduplicated by canonical text, first occurrence wins. The
// matcher is compiled once at construction.
class Model {
 public:
  Model() : Model(std::vector<Pattern>{}) {}
  explicit Model(std::vector<Pattern> patterns, std::size_t generation = 0,
                 std::size_t state_limit = kDefaultStateLimit);

  const std::vector<Pattern>& patterns() const noexcept { return patterns_; }
  std::size_t generation() const noexcept { return generation_; }
  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  const MultiMatcher& matcher() const noexcept { return *matcher_; }

  int predict(std::string_view event) const { return matcher_->match_any(event) ? 1 : 0; }

  // Union with `addition` appended after the existing patterns; generation + 1.
  Model merged(std::span<const Pattern> addition, std::size_t state_limit = kDefaultStateLimit) const;

 private:
  std::vector<Pattern> patterns_;
  std::size_t generation_ = 0;
  std::shared_ptr<const MultiMatcher> matcher_;
};

inline int predict(const Model& m, std::string_view event) { return m.predict(event); }

}  // namespace ttk
