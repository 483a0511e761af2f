#include "ttk/tracker.hpp"

#include <algorithm>
#include <stdexcept>

#include "ttk/errors.hpp"

namespace ttk {

Counts WindowOutcome::counts() const {
  Counts c;
  for (const auto& [y_true, y_pred] : labels) c = accumulate(c, y_true, y_pred);
  return c;
}

std::pair<Model, WindowOutcome> run_window(const Model& m, std::span<const Event> events,
                                           const LearnerConfig& cfg) {
  if (events.empty()) throw std::invalid_argument("window must contain at least one event");
  WindowOutcome out;
  out.labels.reserve(events.size());
  for (const Event& e : events) {
    const int y = m.predict(e.value);
    (y ? out.positives : out.negatives).push_back(e.value);
    out.labels.emplace_back(e.truth, y);
  }
  if (out.positives.empty()) return {m, std::move(out)};

  // learn() deduplicates; predictions are fixed within the window so the
  // two sets are disjoint.
  const Model addition = learn(out.positives, out.negatives, cfg);
  return {m.merged(addition.patterns(), cfg.state_limit), std::move(out)};
}

namespace {

std::vector<Event> read_window(EventSource& source, std::size_t w) {
  std::vector<Event> events;
  events.reserve(w);
  while (events.size() < w) {
    auto e = source.next();
    if (!e) break;
    events.push_back(std::move(*e));
  }
  return events;
}

Model bootstrap_model(std::span<const Event> window, Mode mode, const LearnerConfig& cfg) {
  std::vector<std::string> pos;
  std::vector<std::string> neg;
  for (const Event& e : window) (e.truth ? pos : neg).push_back(e.value);
  if (pos.empty()) return Model({}, 0, cfg.state_limit);
  if (mode == Mode::Adaptive) return learn(pos, neg, cfg);

  // Naive: a blocklist of the positives seen, as exact-match patterns.
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  std::vector<Pattern> exact;
  exact.reserve(pos.size());
  for (const auto& s : pos) exact.push_back(exact_pattern(s));
  return Model(std::move(exact), 0, cfg.state_limit);
}

}  // namespace

std::vector<WindowRecord> run_tracking(EventSource& source, Mode mode, std::size_t window_size,
                                       const LearnerConfig& cfg, const ModelObserver& observer) {
  if (window_size == 0) throw std::invalid_argument("window size must be at least 1");
  const auto first = read_window(source, window_size);
  auto window = read_window(source, window_size);
  if (first.size() < window_size || window.size() < window_size) {
    throw InsufficientStream("stream has " + std::to_string(first.size() + window.size()) +
                             " events; need at least " + std::to_string(2 * window_size));
  }

  Model model = bootstrap_model(first, mode, cfg);
  if (observer) observer(model);

  std::vector<WindowRecord> records;
  Counts cumulative;
  for (std::size_t index = 1; window.size() == window_size; ++index) {
    if (mode == Mode::Naive) {
      for (const Event& e : window) cumulative = accumulate(cumulative, e.truth, model.predict(e.value));
    } else {
      auto [next, outcome] = run_window(model, window, cfg);
      cumulative += outcome.counts();
      const bool changed = next.generation() != model.generation();
      model = std::move(next);
      if (changed && observer) observer(model);
    }
    records.push_back(make_record(index, mode, cumulative, model.size()));
    window = read_window(source, window_size);
  }
  return records;
}

}  // namespace ttk
