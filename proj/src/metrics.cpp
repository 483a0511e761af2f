#include "ttk/metrics.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ttk/errors.hpp"

namespace ttk {

Counts accumulate(Counts c, int y_true, int y_pred) noexcept {
  if (y_true) {
    ++(y_pred ? c.tp : c.fn);
  } else {
    ++(y_pred ? c.fp : c.tn);
  }
  return c;
}

Rates rates(const Counts& c) noexcept {
  Rates r;
  if (c.tp + c.fn > 0) r.tpr = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  if (c.fp + c.tn > 0) r.fpr = static_cast<double>(c.fp) / static_cast<double>(c.fp + c.tn);
  return r;
}

std::string_view mode_name(Mode m) noexcept { return m == Mode::Naive ? "naive" : "adaptive"; }

Mode parse_mode(std::string_view s) {
  if (s == "naive") return Mode::Naive;
  if (s == "adaptive") return Mode::Adaptive;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

WindowRecord make_record(std::size_t window, Mode mode, const Counts& cumulative, std::size_t model_size) {
  const Rates r = rates(cumulative);
  return WindowRecord{window, mode, cumulative, r.tpr, r.fpr, auc_point(r.tpr, r.fpr), model_size};
}

static constexpr std::string_view kHeader = "window,mode,tp,fp,tn,fn,tpr,fpr,auc,model_size";

void write_report(std::ostream& out, std::span<const WindowRecord> records) {
  out << kHeader << '\n';
  char buf[256];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%zu,%s,%llu,%llu,%llu,%llu,%.6f,%.6f,%.6f,%zu\n", r.window,
                  mode_name(r.mode).data(), static_cast<unsigned long long>(r.counts.tp),
                  static_cast<unsigned long long>(r.counts.fp), static_cast<unsigned long long>(r.counts.tn),
                  static_cast<unsigned long long>(r.counts.fn), r.tpr, r.fpr, r.auc, r.model_size);
    out << buf;
  }
}

void write_report(const std::filesystem::path& path, std::span<const WindowRecord> records) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  write_report(out, records);
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<WindowRecord> read_report(std::istream& in) {
  std::vector<WindowRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) {
      if (line != kHeader) throw ParseError(1, "unexpected metrics header");
      continue;
    }
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> f;
    while (std::getline(row, field, ',')) f.push_back(field);
    if (f.size() != 10) throw ParseError(line_no, "expected 10 fields");
    try {
      WindowRecord r;
      r.window = std::stoul(f[0]);
      r.mode = parse_mode(f[1]);
      r.counts = {std::stoull(f[2]), std::stoull(f[3]), std::stoull(f[4]), std::stoull(f[5])};
      r.tpr = std::stod(f[6]);
      r.fpr = std::stod(f[7]);
      r.auc = std::stod(f[8]);
      r.model_size = std::stoul(f[9]);
      records.push_back(r);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    } catch (const std::out_of_range& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return records;
}

}  // namespace ttk
