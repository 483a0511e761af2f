#pragma once

// Throughput comparison between one matcher per pattern, scanned in a loop,
// and the combined multi-pattern matcher.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ttk/pattern.hpp"

namespace ttk {

struct BenchRow {
  std::size_t k = 0;
  double naive_ns_per_event = 0.0;
  double combined_ns_per_event = 0.0;
  // Total matches found; both paths must agree.
  std::size_t hits = 0;
};

// k distinct random literal patterns of 3 to 6 letters or digits.
std::vector<Pattern> random_literals(std::size_t k, std::uint64_t seed);

// Times both paths over `corpus`, keeping the fastest of `reps` runs each.
// Throws std::logic_error if the two paths disagree on any event.
BenchRow run_bench(std::span<const Pattern> patterns, std::span<const std::string> corpus, std::size_t reps = 3);

void write_bench(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace ttk
