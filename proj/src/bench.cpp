#include "ttk/bench.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <stdexcept>

#include "ttk/multi_matcher.hpp"

namespace ttk {

std::vector<Pattern> random_literals(std::size_t k, std::uint64_t seed) {
  static constexpr std::string_view kChars = "abcdefghijklmnopqrstuvwxyz0123456789";
  std::mt19937_64 rng(seed);
  std::set<std::string> seen;
  std::vector<Pattern> out;
  out.reserve(k);
  while (out.size() < k) {
    std::string s(3 + rng() % 4, 'a');
    for (char& c : s) c = kChars[rng() % kChars.size()];
    if (seen.insert(s).second) out.push_back(parse_pattern(s));
  }
  return out;
}

namespace {

template <typename F>
double best_ns(std::size_t reps, F&& run) {
  double best = 0.0;
  for (std::size_t r = 0; r < std::max<std::size_t>(reps, 1); ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    run();
    const double ns = std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - t0).count();
    if (r == 0 || ns < best) best = ns;
  }
  return best;
}

}  // namespace

BenchRow run_bench(std::span<const Pattern> patterns, std::span<const std::string> corpus, std::size_t reps) {
  std::vector<MultiMatcher> singles;
  singles.reserve(patterns.size());
  for (const Pattern& p : patterns) singles.emplace_back(std::span<const Pattern>(&p, 1));
  const MultiMatcher combined(patterns);

  std::size_t naive_hits = 0;
  std::size_t combined_hits = 0;
  const double naive = best_ns(reps, [&] {
    naive_hits = 0;
    for (const auto& s : corpus) {
      for (const auto& m : singles) naive_hits += m.match_any(s);
    }
  });
  const double both = best_ns(reps, [&] {
    combined_hits = 0;
    for (const auto& s : corpus) combined_hits += combined.match_set(s).size();
  });
  if (naive_hits != combined_hits) throw std::logic_error("benchmark paths disagree");

  const double n = corpus.empty() ? 1.0 : static_cast<double>(corpus.size());
  return BenchRow{patterns.size(), naive / n, both / n, naive_hits};
}

void write_bench(std::ostream& out, std::span<const BenchRow> rows) {
  out << "k,naive_ns_per_event,combined_ns_per_event\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%.1f,%.1f\n", r.k, r.naive_ns_per_event, r.combined_ns_per_event);
    out << buf;
  }
}

}  // namespace ttk
