#include "ttk/golf.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "support/random_text.hpp"
#include "ttk/errors.hpp"

namespace ttk {
namespace {

std::vector<std::string> texts_of(const ComponentPool& pool) {
  std::vector<std::string> out;
  for (const auto& p : pool.components) out.push_back(render_pattern(p));
  return out;
}

std::vector<std::string> texts_of(const Model& m) {
  std::vector<std::string> out;
  for (const auto& p : m.patterns()) out.push_back(render_pattern(p));
  return out;
}

ComponentPool pool_of(const std::vector<std::string>& texts) {
  ComponentPool pool;
  for (const auto& t : texts) {
    pool.components.push_back(parse_pattern(t));
    pool.provenance.push_back(0);
  }
  return pool;
}

// Brute-force enumeration of the production rules on raw text: pick a
// substring, a mask of wildcard positions, then a mask of quantified
// literal positions with one of three quantifiers each.
std::vector<std::string> enumerate_pool(const std::vector<std::string>& positives, std::size_t max_ngram,
                                        std::size_t max_wild, std::size_t max_quant) {
  std::set<std::string> texts;
  for (const auto& s : positives) {
    for (std::size_t start = 0; start < s.size(); ++start) {
      for (std::size_t len = 1; len <= max_ngram && start + len <= s.size(); ++len) {
        const std::string gram = s.substr(start, len);
        for (unsigned wild = 0; wild < (1u << len); ++wild) {
          const auto nw = static_cast<std::size_t>(std::popcount(wild));
          if (nw > max_wild || nw == len) continue;
          for (unsigned qmask = 0; qmask < (1u << len); ++qmask) {
            if (qmask & wild) continue;
            const auto nq = static_cast<std::size_t>(std::popcount(qmask));
            if (nq > max_quant) continue;
            std::size_t combos = 1;
            for (std::size_t i = 0; i < nq; ++i) combos *= 3;
            for (std::size_t code = 0; code < combos; ++code) {
              std::string text;
              std::size_t c = code;
              for (std::size_t i = 0; i < len; ++i) {
                if (wild >> i & 1u) {
                  text += '.';
                  continue;
                }
                text += gram[i] == '.' ? std::string("\\.") : std::string(1, gram[i]);
                if (qmask >> i & 1u) {
                  text += "?*+"[c % 3];
                  c /= 3;
                }
              }
              texts.insert(text);
            }
          }
        }
      }
    }
  }
  std::vector<std::string> out(texts.begin(), texts.end());
  std::stable_sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

LearnerConfig config(std::size_t n, std::size_t w, std::size_t q) {
  LearnerConfig cfg;
  cfg.max_ngram = n;
  cfg.max_wildcards = w;
  cfg.max_quantified = q;
  return cfg;
}

TEST(GenerateComponents, BigramWithOneWildcard) {
  const std::vector<std::string> p = {"ab"};
  const auto pool = generate_components(p, config(2, 1, 0));
  const auto got = texts_of(pool);
  EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), (std::set<std::string>{"a", "b", "ab", "a.", ".b"}));
  EXPECT_EQ(got, enumerate_pool(p, 2, 1, 0));
}

TEST(GenerateComponents, SingleCharacterQuantifiers) {
  const std::vector<std::string> p = {"a"};
  EXPECT_EQ(texts_of(generate_components(p, config(4, 2, 1))),
            (std::vector<std::string>{"a", "a*", "a+", "a?"}));
}

TEST(GenerateComponents, QuantifiedBigramIncludesListedVariants) {
  const std::vector<std::string> p = {"ab"};
  const auto got = texts_of(generate_components(p, config(2, 1, 1)));
  const std::set<std::string> have(got.begin(), got.end());
  for (const char* t : {"a?", "a*", "a+", "b?", "b*", "b+", "a?b", "a*b", "a+b", "ab?", "ab*", "ab+", "a.", "a?.",
                        "a*.", "a+.", ".b", ".b?", ".b*", ".b+"}) {
    EXPECT_TRUE(have.count(t)) << t;
  }
  EXPECT_EQ(got, enumerate_pool(p, 2, 1, 1));
}

TEST(GenerateComponents, MatchesEnumerationOracleOnRandomInputs) {
  testing::TextGen gen(31337);
  for (int round = 0; round < 60; ++round) {
    std::vector<std::string> p;
    const std::size_t n = 1 + gen.below(4);
    for (std::size_t i = 0; i < n; ++i) p.push_back(gen.string(1, 7, "abc.-1"));
    const std::size_t ng = 1 + gen.below(4), w = gen.below(3), q = gen.below(3);
    ASSERT_EQ(texts_of(generate_components(p, config(ng, w, q))), enumerate_pool(p, ng, w, q))
        << "round " << round;
  }
}

TEST(GenerateComponents, ProvenancePointsAtAProducingString) {
  const std::vector<std::string> p = {"xy", "ab", "zab"};
  const auto pool = generate_components(p, config(3, 1, 1));
  ASSERT_EQ(pool.provenance.size(), pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    ASSERT_LT(pool.provenance[i], p.size());
    EXPECT_TRUE(match_one(pool.components[i], p[pool.provenance[i]])) << render_pattern(pool.components[i]);
  }
}

TEST(GenerateComponents, TruncatesToMaxPool) {
  const std::vector<std::string> p = {"abcdef", "ghij"};
  LearnerConfig cfg = config(4, 2, 1);
  const auto full = texts_of(generate_components(p, cfg));
  cfg.max_pool = 25;
  const auto cut = texts_of(generate_components(p, cfg));
  ASSERT_EQ(cut.size(), 25u);
  EXPECT_TRUE(std::equal(cut.begin(), cut.end(), full.begin()));
}

TEST(GenerateComponents, EmptyPositiveSet) {
  EXPECT_THROW(generate_components({}, LearnerConfig{}), EmptyPositiveSet);
  EXPECT_THROW(learn({}, {}, LearnerConfig{}), EmptyPositiveSet);
}

TEST(FilterComponents, Examples) {
  const std::vector<std::string> ba = {"ba"};
  EXPECT_EQ(texts_of(filter_components(pool_of({"a", "b", "ab"}), ba)), (std::vector<std::string>{"ab"}));
  EXPECT_EQ(texts_of(filter_components(pool_of({"a", "b", "ab"}), {})), (std::vector<std::string>{"a", "b", "ab"}));
  const std::vector<std::string> axb = {"axb"};
  EXPECT_TRUE(filter_components(pool_of({"x"}), axb).empty());
}

TEST(FilterComponents, AgreesWithPerComponentMatching) {
  testing::TextGen gen(555);
  for (int round = 0; round < 100; ++round) {
    std::vector<std::string> texts;
    for (std::size_t i = 0, n = 1 + gen.below(30); i < n; ++i) texts.push_back(gen.pattern(5));
    std::vector<std::string> negatives;
    for (std::size_t i = 0, n = gen.below(6); i < n; ++i) negatives.push_back(gen.string(0, 10));
    const ComponentPool pool = pool_of(texts);
    std::vector<std::string> expected;
    for (const auto& p : pool.components) {
      const bool hit = std::any_of(negatives.begin(), negatives.end(), [&](const auto& s) { return match_one(p, s); });
      if (!hit) expected.push_back(render_pattern(p));
    }
    ASSERT_EQ(texts_of(filter_components(pool, negatives)), expected) << "round " << round;
  }
}

TEST(MatchComponents, AgreesWithMatchOne) {
  testing::TextGen gen(808);
  for (int round = 0; round < 100; ++round) {
    std::vector<Pattern> patterns;
    for (std::size_t i = 0, n = 1 + gen.below(25); i < n; ++i) patterns.push_back(parse_pattern(gen.pattern(5)));
    std::vector<std::string> strings;
    for (std::size_t i = 0, n = gen.below(10); i < n; ++i) strings.push_back(gen.string(0, 10));
    const auto hits = match_components(patterns, strings);
    ASSERT_EQ(hits.size(), patterns.size());
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      std::vector<std::size_t> expected;
      for (std::size_t j = 0; j < strings.size(); ++j) {
        if (match_one(patterns[i], strings[j])) expected.push_back(j);
      }
      ASSERT_EQ(hits[i], expected) << render_pattern(patterns[i]);
    }
  }
}

// ---------------------------------------------------------------------------
// Set cover

std::size_t brute_force_optimum(const CoverProblem& prob) {
  const std::size_t m = prob.subsets.size();
  std::size_t best = m + 1;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::set<std::size_t> covered;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1u) covered.insert(prob.subsets[i].begin(), prob.subsets[i].end());
    }
    const bool ok = std::all_of(prob.universe.begin(), prob.universe.end(),
                                [&](std::size_t e) { return covered.count(e) > 0; });
    if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

TEST(GreedySetCover, TextbookInstance) {
  const CoverProblem prob{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                          {{1, 2}, {2, 3, 4, 5}, {2, 4, 6}, {4, 6, 8}, {1, 3, 5}, {7, 9}, {1, 10}}};
  EXPECT_EQ(greedy_set_cover(prob), (std::vector<std::size_t>{1, 3, 5, 6}));
}

TEST(GreedySetCover, SmallExamples) {
  EXPECT_EQ(greedy_set_cover({{1}, {{1}}}), (std::vector<std::size_t>{0}));
  const CoverProblem tie{{1, 2, 3}, {{1, 2}, {2, 3}, {3}}};
  EXPECT_EQ(greedy_set_cover(tie), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(brute_force_optimum(tie), 2u);
  EXPECT_TRUE(greedy_set_cover({{}, {{1}}}).empty());
}

TEST(GreedySetCover, Uncoverable) {
  try {
    greedy_set_cover({{1, 2, 3, 4}, {{1}, {3}}});
    FAIL();
  } catch (const UncoverableElements& e) {
    EXPECT_EQ(e.elements(), (std::vector<std::size_t>{2, 4}));
  }
}

TEST(GreedySetCover, CoversWithinHarmonicBound) {
  testing::TextGen gen(2718);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + gen.below(8);
    CoverProblem prob;
    for (std::size_t e = 0; e < n; ++e) prob.universe.push_back(e);
    const std::size_t m = 1 + gen.below(10);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::size_t> s;
      for (std::size_t e = 0; e < n; ++e) {
        if (gen.coin(0.35)) s.push_back(e);
      }
      prob.subsets.push_back(s);
    }
    prob.subsets.push_back({gen.below(n)});
    std::set<std::size_t> all;
    for (const auto& s : prob.subsets) all.insert(s.begin(), s.end());
    if (all.size() != n) continue;

    const auto chosen = greedy_set_cover(prob);
    std::set<std::size_t> covered;
    for (std::size_t i : chosen) {
      std::size_t fresh = 0;
      for (std::size_t e : prob.subsets[i]) fresh += covered.insert(e).second;
      EXPECT_GE(fresh, 1u);
    }
    EXPECT_EQ(covered.size(), n);
    double harmonic = 0;
    for (std::size_t k = 1; k <= n; ++k) harmonic += 1.0 / static_cast<double>(k);
    EXPECT_LE(static_cast<double>(chosen.size()), harmonic * static_cast<double>(brute_force_optimum(prob)) + 1e-9);
  }
}

// ---------------------------------------------------------------------------
// learn

TEST(Learn, AnchoredFallback) {
  const std::vector<std::string> p = {"ab"}, n = {"xaby"};
  EXPECT_EQ(texts_of(learn(p, n)), (std::vector<std::string>{"^ab$"}));
}

TEST(Learn, ShortestComponentWins) {
  const std::vector<std::string> p = {"a"};
  EXPECT_EQ(texts_of(learn(p, {})), (std::vector<std::string>{"a"}));
}

TEST(Learn, OneComponentCoversSharedPrefix) {
  const std::vector<std::string> p = {"foo", "food"}, n = {"bar"};
  const Model m = learn(p, n);
  // The shortest surviving component covering both strings is "f".
  EXPECT_EQ(texts_of(m), (std::vector<std::string>{"f"}));
}

TEST(Learn, Disjointness) {
  const std::vector<std::string> p = {"a", "b", "c"}, n = {"c", "d", "a"};
  try {
    learn(p, n);
    FAIL();
  } catch (const DisjointnessViolation& e) {
    EXPECT_EQ(e.strings(), (std::vector<std::string>{"a", "c"}));
  }
}

std::vector<std::string> distinct_strings(testing::TextGen& gen, std::size_t count, std::set<std::string>& used) {
  std::vector<std::string> out;
  for (std::size_t tries = 0; out.size() < count && tries < 10 * count + 10; ++tries) {
    std::string s = gen.string(1, 12, "abcde.-1");
    if (used.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

TEST(Learn, PerfectSeparationOnRandomInputs) {
  testing::TextGen gen(4096);
  for (int round = 0; round < 80; ++round) {
    std::set<std::string> used;
    const auto p = distinct_strings(gen, 1 + gen.below(20), used);
    const auto n = distinct_strings(gen, gen.below(21), used);
    const Model m = learn(p, n);
    for (const auto& s : p) ASSERT_EQ(m.predict(s), 1) << s;
    for (const auto& s : n) ASSERT_EQ(m.predict(s), 0) << s;

    // Each selected component covers a positive not covered by earlier ones.
    std::set<std::size_t> covered;
    for (const auto& c : m.patterns()) {
      std::size_t fresh = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (match_one(c, p[i])) fresh += covered.insert(i).second;
      }
      EXPECT_GE(fresh, 1u) << render_pattern(c);
    }
  }
}

TEST(Learn, IndependentOfInputOrder) {
  testing::TextGen gen(99);
  for (int round = 0; round < 20; ++round) {
    std::set<std::string> used;
    auto p = distinct_strings(gen, 1 + gen.below(12), used);
    auto n = distinct_strings(gen, gen.below(12), used);
    const auto first = texts_of(learn(p, n));
    std::shuffle(p.begin(), p.end(), gen.engine());
    std::shuffle(n.begin(), n.end(), gen.engine());
    // Duplicates in the input are ignored as well.
    if (!p.empty()) p.push_back(p.front());
    EXPECT_EQ(texts_of(learn(p, n)), first);
  }
}

TEST(LearnerConfig, Validate) {
  LearnerConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.max_ngram = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace ttk
