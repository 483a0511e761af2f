#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace ttk {

struct Counts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;

  Counts& operator+=(const Counts& o) noexcept {
    tp += o.tp;
    fp += o.fp;
    tn += o.tn;
    fn += o.fn;
    return *this;
  }
  friend Counts operator+(Counts a, const Counts& b) noexcept { return a += b; }
  friend bool operator==(const Counts&, const Counts&) = default;
};

Counts accumulate(Counts c, int y_true, int y_pred) noexcept;

struct Rates {
  double tpr = 0.0;
  double fpr = 0.0;
};

// Zero denominators give 0.0.
Rates rates(const Counts& c) noexcept;

// Area under the ROC polyline (0,0) -> (fpr,tpr) -> (1,1).
constexpr double auc_point(double tpr, double fpr) noexcept { return (1.0 + tpr - fpr) / 2.0; }

enum class Mode { Naive, Adaptive };

std::string_view mode_name(Mode m) noexcept;
// Throws std::invalid_argument for anything but "naive" / "adaptive".
Mode parse_mode(std::string_view s);

struct WindowRecord {
  std::size_t window = 0;
  Mode mode = Mode::Naive;
  Counts counts;  // cumulative
  double tpr = 0.0;
  double fpr = 0.0;
  double auc = 0.5;
  std::size_t model_size = 0;
};

WindowRecord make_record(std::size_t window, Mode mode, const Counts& cumulative, std::size_t model_size);

// CSV: window,mode,tp,fp,tn,fn,tpr,fpr,auc,model_size with six decimals.
void write_report(std::ostream& out, std::span<const WindowRecord> records);
void write_report(const std::filesystem::path& path, std::span<const WindowRecord> records);
std::vector<WindowRecord> read_report(std::istream& in);

}  // namespace ttk
