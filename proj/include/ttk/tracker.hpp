#pragma once

// Windowed self-training: the current model labels each window, and the
// window's predicted positives and negatives train an addition that is
// unioned into the model.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ttk/golf.hpp"
#include "ttk/metrics.hpp"
#include "ttk/model.hpp"
#include "ttk/stream.hpp"

namespace ttk {

struct WindowOutcome {
  std::vector<std::string> positives;  // values predicted 1, in stream order
  std::vector<std::string> negatives;  // values predicted 0, in stream order
  std::vector<std::pair<int, int>> labels;  // (y_true, y_pred) per event

  Counts counts() const;
};

// Labels `events` with m and, if anything was predicted positive, learns on
// the distinct predicted positives/negatives and merges the result into m.
// Ground truth is only copied into WindowOutcome::labels.
std::pair<Model, WindowOutcome> run_window(const Model& m, std::span<const Event> events,
                                           const LearnerConfig& cfg);

// Called with the bootstrap model and with every later generation.
using ModelObserver = std::function<void(const Model&)>;

// Window 0 is labeled from ground truth to seed the model; every later full
// window is predicted (and, in adaptive mode, learned from). Emits one
// record of cumulative counts per post-bootstrap window; a trailing partial
// window is dropped. Throws InsufficientStream for fewer than 2w events.
std::vector<WindowRecord> run_tracking(EventSource& source, Mode mode, std::size_t window_size,
                                       const LearnerConfig& cfg, const ModelObserver& observer = {});

}  // namespace ttk
