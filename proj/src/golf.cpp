#include "ttk/golf.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "ttk/errors.hpp"

namespace ttk {

void LearnerConfig::validate() const {
  if (max_ngram == 0) throw std::invalid_argument("max_ngram must be at least 1");
}

// ---------------------------------------------------------------------------
// Component generation

namespace {

class VariantEmitter {
 public:
  VariantEmitter(const LearnerConfig& cfg, std::unordered_map<std::string, std::size_t>& out)
      : cfg_(cfg), out_(out) {}

  void emit_all(std::string_view gram, std::size_t source) {
    gram_ = gram;
    source_ = source;
    text_.clear();
    walk(0, 0, 0, 0);
  }

 private:
  void walk(std::size_t pos, std::size_t wildcards, std::size_t quantified, std::size_t literals) {
    if (pos == gram_.size()) {
      if (literals == 0) return;
      auto [it, inserted] = out_.try_emplace(text_, source_);
      if (!inserted && source_ < it->second) it->second = source_;
      return;
    }
    const std::size_t mark = text_.size();
    const char c = gram_[pos];
    if (c == '.') {
      text_ += "\\.";
    } else {
      text_ += c;
    }
    walk(pos + 1, wildcards, quantified, literals + 1);
    if (quantified < cfg_.max_quantified) {
      const std::size_t lit_end = text_.size();
      for (char q : {'?', '*', '+'}) {
        text_ += q;
        walk(pos + 1, wildcards, quantified + 1, literals + 1);
        text_.resize(lit_end);
      }
    }
    text_.resize(mark);
    if (wildcards < cfg_.max_wildcards) {
      text_ += '.';
      walk(pos + 1, wildcards + 1, quantified, literals);
      text_.resize(mark);
    }
  }

  const LearnerConfig& cfg_;
  std::unordered_map<std::string, std::size_t>& out_;
  std::string_view gram_;
  std::size_t source_ = 0;
  std::string text_;
};

bool shorter_text_first(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

ComponentPool generate_components(std::span<const std::string> positives, const LearnerConfig& cfg) {
  cfg.validate();
  if (positives.empty()) throw EmptyPositiveSet();

  // Distinct n-grams with the first positive that contains them.
  std::unordered_map<std::string_view, std::size_t> grams;
  for (std::size_t i = 0; i < positives.size(); ++i) {
    const std::string_view s = positives[i];
    const std::size_t top = std::min(cfg.max_ngram, s.size());
    for (std::size_t n = 1; n <= top; ++n) {
      for (std::size_t at = 0; at + n <= s.size(); ++at) grams.try_emplace(s.substr(at, n), i);
    }
  }

  std::unordered_map<std::string, std::size_t> variants;
  VariantEmitter emitter(cfg, variants);
  for (const auto& [gram, source] : grams) emitter.emit_all(gram, source);

  std::vector<std::pair<std::string, std::size_t>> ordered(variants.begin(), variants.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return shorter_text_first(a.first, b.first); });
  if (ordered.size() > cfg.max_pool) ordered.resize(cfg.max_pool);

  ComponentPool pool;
  pool.components.reserve(ordered.size());
  pool.provenance.reserve(ordered.size());
  for (const auto& [text, source] : ordered) {
    pool.components.push_back(parse_pattern(text));
    pool.provenance.push_back(source);
  }
  return pool;
}

// ---------------------------------------------------------------------------
// Evaluating many patterns at once

namespace {

// Patterns stored as paths in a trie keyed by atom. Walking the trie from
// every start offset of a string visits each shared prefix once.
class PatternTrie {
 public:
  explicit PatternTrie(std::span<const Pattern> patterns) : patterns_(patterns) {
    nodes_.emplace_back();
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      std::uint32_t node = 0;
      for (const Atom& a : patterns[i].atoms) node = child(node, a);
      nodes_[node].terminals.push_back(static_cast<std::uint32_t>(i));
    }
    for (auto& n : nodes_) {
      std::sort(n.consuming.begin(), n.consuming.end());
    }
  }

  // Calls hit(pattern_index) for every pattern matching s (possibly repeatedly).
  template <typename F>
  void scan(std::string_view s, F&& hit) const {
    for (std::size_t start = 0; start <= s.size(); ++start) visit(0, start, start == 0, s, hit);
  }

 private:
  struct Edge {
    std::uint16_t key;  // symbol * 4 + quantifier
    std::uint32_t child;
    friend bool operator<(const Edge& a, const Edge& b) { return a.key < b.key; }
  };
  struct Node {
    std::vector<Edge> consuming;                // all edges, sorted by key
    std::vector<std::uint32_t> skippable;       // children behind '?' or '*'
    std::vector<std::uint32_t> terminals;
  };

  static std::uint16_t key_of(const Atom& a) {
    const int sym = a.any ? kAlphabetSize : symbol_of(a.ch);
    return static_cast<std::uint16_t>(sym * 4 + static_cast<int>(a.quant));
  }

  std::uint32_t child(std::uint32_t node, const Atom& a) {
    const std::uint16_t key = key_of(a);
    for (const Edge& e : nodes_[node].consuming) {
      if (e.key == key) return e.child;
    }
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
    nodes_[node].consuming.push_back({key, id});
    if (a.optional()) nodes_[node].skippable.push_back(id);
    return id;
  }

  template <typename F>
  void visit(std::uint32_t node, std::size_t pos, bool at_start, std::string_view s, F& hit) const {
    const Node& n = nodes_[node];
    for (std::uint32_t t : n.terminals) {
      const Pattern& p = patterns_[t];
      if ((!p.anchored_start || at_start) && (!p.anchored_end || pos == s.size())) hit(t);
    }
    for (std::uint32_t c : n.skippable) visit(c, pos, at_start, s, hit);
    if (pos == s.size() || !in_alphabet(s[pos])) return;
    const int sym = symbol_of(s[pos]);
    for (int base : {sym, static_cast<int>(kAlphabetSize)}) {
      const auto lo = static_cast<std::uint16_t>(base * 4);
      auto it = std::lower_bound(n.consuming.begin(), n.consuming.end(), Edge{lo, 0});
      for (; it != n.consuming.end() && it->key < lo + 4; ++it) {
        const auto quant = static_cast<Quantifier>(it->key - lo);
        if (quant == Quantifier::One || quant == Quantifier::ZeroOrOne) {
          visit(it->child, pos + 1, at_start, s, hit);
          continue;
        }
        // Repeated literal: every run length >= 1.
        const char c = s[pos];
        for (std::size_t end = pos + 1;; ++end) {
          visit(it->child, end, at_start, s, hit);
          if (end == s.size() || s[end] != c) break;
        }
      }
    }
  }

  std::span<const Pattern> patterns_;
  std::vector<Node> nodes_;
};

}  // namespace

std::vector<std::vector<std::size_t>> match_components(std::span<const Pattern> patterns,
                                                       std::span<const std::string> strings) {
  const PatternTrie trie(patterns);
  std::vector<std::vector<std::size_t>> hits(patterns.size());
  for (std::size_t si = 0; si < strings.size(); ++si) {
    trie.scan(strings[si], [&](std::uint32_t t) {
      auto& h = hits[t];
      if (h.empty() || h.back() != si) h.push_back(si);
    });
  }
  return hits;
}

ComponentPool filter_components(const ComponentPool& pool, std::span<const std::string> negatives) {
  if (negatives.empty()) return pool;
  const PatternTrie trie(pool.components);
  std::vector<char> rejected(pool.size(), 0);
  for (const auto& s : negatives) trie.scan(s, [&](std::uint32_t t) { rejected[t] = 1; });

  ComponentPool kept;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (rejected[i]) continue;
    kept.components.push_back(pool.components[i]);
    kept.provenance.push_back(pool.provenance[i]);
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Set cover

std::vector<std::size_t> greedy_set_cover(const CoverProblem& problem) {
  // Dense ids for the universe.
  std::unordered_map<std::size_t, std::size_t> dense;
  for (std::size_t e : problem.universe) dense.try_emplace(e, dense.size());
  const std::size_t n = dense.size();

  std::vector<std::vector<std::size_t>> members(problem.subsets.size());
  std::vector<char> reachable(n, 0);
  for (std::size_t i = 0; i < problem.subsets.size(); ++i) {
    for (std::size_t e : problem.subsets[i]) {
      auto it = dense.find(e);
      if (it == dense.end()) continue;
      members[i].push_back(it->second);
      reachable[it->second] = 1;
    }
    std::sort(members[i].begin(), members[i].end());
    members[i].erase(std::unique(members[i].begin(), members[i].end()), members[i].end());
  }

  std::vector<std::size_t> missing;
  for (std::size_t e : problem.universe) {
    if (!reachable[dense.at(e)]) missing.push_back(e);
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    throw UncoverableElements(std::move(missing));
  }

  // Lazy greedy: gains only shrink, so a popped entry whose recomputed gain
  // is unchanged is the true maximum, and the (gain desc, index asc) order
  // keeps the lowest index on ties.
  struct Entry {
    std::size_t gain;
    std::size_t index;
    bool operator<(const Entry& o) const { return gain != o.gain ? gain < o.gain : index > o.index; }
  };
  std::priority_queue<Entry> heap;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!members[i].empty()) heap.push({members[i].size(), i});
  }

  std::vector<char> covered(n, 0);
  std::size_t remaining = n;
  std::vector<std::size_t> chosen;
  while (remaining > 0) {
    const Entry top = heap.top();
    heap.pop();
    std::size_t gain = 0;
    for (std::size_t e : members[top.index]) gain += covered[e] ? 0 : 1;
    if (gain == 0) continue;
    if (gain < top.gain) {
      heap.push({gain, top.index});
      continue;
    }
    chosen.push_back(top.index);
    for (std::size_t e : members[top.index]) {
      if (!covered[e]) {
        covered[e] = 1;
        --remaining;
      }
    }
  }
  return chosen;
}

// ---------------------------------------------------------------------------
// Learning

namespace {

std::vector<std::string> sorted_distinct(std::span<const std::string> in) {
  std::vector<std::string> out(in.begin(), in.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Model learn(std::span<const std::string> positives, std::span<const std::string> negatives,
            const LearnerConfig& cfg) {
  cfg.validate();
  const auto pos = sorted_distinct(positives);
  const auto neg = sorted_distinct(negatives);
  if (pos.empty()) throw EmptyPositiveSet();

  std::vector<std::string> overlap;
  std::set_intersection(pos.begin(), pos.end(), neg.begin(), neg.end(), std::back_inserter(overlap));
  if (!overlap.empty()) throw DisjointnessViolation(std::move(overlap));

  ComponentPool pool = filter_components(generate_components(pos, cfg), neg);
  auto cover = match_components(pool.components, pos);

  std::vector<char> covered(pos.size(), 0);
  for (const auto& hits : cover) {
    for (std::size_t i : hits) covered[i] = 1;
  }
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (covered[i]) continue;
    pool.components.push_back(exact_pattern(pos[i]));
    pool.provenance.push_back(i);
    cover.push_back({i});
  }

  CoverProblem problem;
  problem.universe.resize(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) problem.universe[i] = i;
  problem.subsets = std::move(cover);

  std::vector<Pattern> selected;
  for (std::size_t idx : greedy_set_cover(problem)) selected.push_back(pool.components[idx]);
  return Model(std::move(selected), 0, cfg.state_limit);
}

}  // namespace ttk
