#pragma once

// Regex golf: find a short disjunction of patterns that matches every
// positive string and no negative string. Candidate components come from
// the positives' n-grams with wildcard and quantifier variations; those
// that hit a negative are dropped and a greedy set cover picks the rest.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ttk/model.hpp"
#include "ttk/multi_matcher.hpp"
#include "ttk/pattern.hpp"

namespace ttk {

struct LearnerConfig {
  std::size_t max_ngram = 4;
  std::size_t max_wildcards = 2;   // AnyChar substitutions per component
  std::size_t max_quantified = 1;  // quantifier insertions per component
  std::size_t max_pool = 200'000;
  std::size_t state_limit = kDefaultStateLimit;

  // Throws std::invalid_argument if max_ngram is zero.
  void validate() const;
};

struct ComponentPool {
  std::vector<Pattern> components;
  // Index into the positive input of a string that produced each component.
  std::vector<std::size_t> provenance;

  std::size_t size() const noexcept { return components.size(); }
  bool empty() const noexcept { return components.empty(); }
};

// Components ordered by (canonical text length, canonical text), truncated
// to cfg.max_pool. Throws EmptyPositiveSet if positives is empty.
ComponentPool generate_components(std::span<const std::string> positives, const LearnerConfig& cfg);

// Keeps the components that match none of `negatives`; order is preserved.
ComponentPool filter_components(const ComponentPool& pool, std::span<const std::string> negatives);

// hits[i] lists (ascending) the indices of `strings` matched by patterns[i],
// with the same semantics as match_one. Evaluates all patterns together
// through a shared prefix trie.
std::vector<std::vector<std::size_t>> match_components(std::span<const Pattern> patterns,
                                                       std::span<const std::string> strings);

struct CoverProblem {
  std::vector<std::size_t> universe;
  std::vector<std::vector<std::size_t>> subsets;
};

// Greedy set cover: repeatedly takes the subset covering the most uncovered
// elements, lowest index on ties. Returns the chosen indices in selection
// order. Throws UncoverableElements if some element is in no subset.
std::vector<std::size_t> greedy_set_cover(const CoverProblem& problem);

// Learns a model matching every string of `positives` and none of
// `negatives`. Positives left uncovered by the filtered pool get an anchored
// exact-match component. Throws EmptyPositiveSet or DisjointnessViolation.
Model learn(std::span<const std::string> positives, std::span<const std::string> negatives,
            const LearnerConfig& cfg = {});

}  // namespace ttk
