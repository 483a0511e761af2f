#include "ttk/errors.hpp"

namespace ttk {

namespace {

template <typename Seq, typename F>
std::string join_limited(const Seq& items, F&& fmt, std::size_t limit = 8) {
  std::string out;
  for (std::size_t i = 0; i < items.size() && i < limit; ++i) {
    if (i) out += ", ";
    out += fmt(items[i]);
  }
  if (items.size() > limit) out += ", ... (" + std::to_string(items.size()) + " total)";
  return out;
}

}  // namespace

DisjointnessViolation::DisjointnessViolation(std::vector<std::string> strings)
    : Error("positive and negative sets overlap: " +
            join_limited(strings, [](const std::string& s) { return s; })),
      strings_(std::move(strings)) {}

UncoverableElements::UncoverableElements(std::vector<std::size_t> elements)
    : Error("elements in no subset: " +
            join_limited(elements, [](std::size_t e) { return std::to_string(e); })),
      elements_(std::move(elements)) {}

}  // namespace ttk
