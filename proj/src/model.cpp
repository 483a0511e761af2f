#include "ttk/model.hpp"

#include <string>
#include <unordered_set>

namespace ttk {

namespace {

std::vector<Pattern> dedup(std::vector<Pattern> patterns) {
  std::unordered_set<std::string> seen;
  std::vector<Pattern> out;
  out.reserve(patterns.size());
  for (auto& p : patterns) {
    if (seen.insert(render_pattern(p)).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

Model::Model(std::vector<Pattern> patterns, std::size_t generation, std::size_t state_limit)
    : patterns_(dedup(std::move(patterns))),
      generation_(generation),
      matcher_(std::make_shared<const MultiMatcher>(patterns_, state_limit)) {}

Model Model::merged(std::span<const Pattern> addition, std::size_t state_limit) const {
  std::vector<Pattern> all = patterns_;
  all.insert(all.end(), addition.begin(), addition.end());
  return Model(std::move(all), generation_ + 1, state_limit);
}

}  // namespace ttk
