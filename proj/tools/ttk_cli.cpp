// ttk: generate drifting event streams, learn regex models, run tracking
// experiments and benchmark the matcher.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ttk/bench.hpp"
#include "ttk/errors.hpp"
#include "ttk/golf.hpp"
#include "ttk/model_file.hpp"
#include "ttk/stream.hpp"
#include "ttk/tracker.hpp"

namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kOther = 1, kDisjoint = 2, kInsufficient = 3, kCapacity = 4 };

struct Options {
  // stream
  std::uint64_t seed = 1;
  std::size_t events = 50'000;
  double positive_frac = ttk::DriftConfig{}.positive_frac;
  double drift_rate = ttk::DriftConfig{}.drift_rate;
  // learner
  ttk::LearnerConfig learner;
  // tracking
  std::size_t window_size = 1000;
  std::string mode = "adaptive";
  std::string in;
  std::string out;
  std::string snapshots;
  std::string blacklist;
  std::vector<std::string> positive_categories = {"ads"};
  // learn
  std::string positives;
  std::string negatives;
  // bench
  std::vector<std::size_t> pattern_counts = {0, 10, 100, 1000};
  std::size_t reps = 3;
};

ttk::DriftConfig drift_config(const Options& o) {
  ttk::DriftConfig cfg;
  cfg.seed = o.seed;
  cfg.positive_frac = o.positive_frac;
  cfg.drift_rate = o.drift_rate;
  return cfg;
}

void add_stream_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "generator seed");
  cmd->add_option("--events", o.events, "number of events to generate");
  cmd->add_option("--positive-frac", o.positive_frac, "fraction of positive events")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--drift-rate", o.drift_rate, "per-step mutation probability of each positive token")
      ->check(CLI::Range(0.0, 1.0));
}

void add_learner_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-ngram", o.learner.max_ngram, "longest n-gram used for components")->check(CLI::PositiveNumber);
  cmd->add_option("--max-wildcards", o.learner.max_wildcards, "wildcards per component");
  cmd->add_option("--max-quantified", o.learner.max_quantified, "quantifiers per component");
  cmd->add_option("--max-pool", o.learner.max_pool, "component pool cap");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ttk::IoError("cannot write " + path);
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ttk::IoError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

int cmd_gen(const Options& o) {
  auto src = ttk::gen_synthetic(drift_config(o));
  std::vector<ttk::Event> events;
  events.reserve(o.events);
  for (std::size_t i = 0; i < o.events; ++i) events.push_back(*src->next());
  if (o.out.empty()) {
    ttk::write_tsv(std::cout, events);
  } else {
    auto out = open_out(o.out);
    ttk::write_tsv(out, events);
  }
  return kOk;
}

int cmd_learn(const Options& o) {
  const auto pos = read_lines(o.positives);
  const auto neg = o.negatives.empty() ? std::vector<std::string>{} : read_lines(o.negatives);
  const ttk::Model model = ttk::learn(pos, neg, o.learner);

  ttk::Counts c;
  for (const auto& s : pos) c = ttk::accumulate(c, 1, model.predict(s));
  for (const auto& s : neg) c = ttk::accumulate(c, 0, model.predict(s));
  const auto r = ttk::rates(c);

  if (o.out.empty()) {
    ttk::write_model(std::cout, model.patterns());
  } else {
    ttk::write_model_file(o.out, model.patterns());
  }
  std::fprintf(stderr, "patterns: %zu\ntraining tpr: %.6f fpr: %.6f\n", model.size(), r.tpr, r.fpr);
  return kOk;
}

// Replaces each event's label with its blacklist label.
class RelabeledSource final : public ttk::EventSource {
 public:
  RelabeledSource(std::unique_ptr<ttk::EventSource> inner, ttk::Blacklist bl, std::set<std::string> positive)
      : inner_(std::move(inner)), blacklist_(std::move(bl)), positive_(std::move(positive)) {}

  std::optional<ttk::Event> next() override {
    auto e = inner_->next();
    if (e) e->truth = ttk::bootstrap_label(e->value, blacklist_, positive_);
    return e;
  }

 private:
  std::unique_ptr<ttk::EventSource> inner_;
  ttk::Blacklist blacklist_;
  std::set<std::string> positive_;
};

int cmd_track(const Options& o) {
  const ttk::Mode mode = ttk::parse_mode(o.mode);
  std::unique_ptr<ttk::EventSource> src =
      o.in.empty() ? std::make_unique<ttk::LimitedSource>(ttk::gen_synthetic(drift_config(o)), o.events)
                   : ttk::load_tsv(o.in);
  if (!o.blacklist.empty()) {
    src = std::make_unique<RelabeledSource>(
        std::move(src), ttk::Blacklist::load(o.blacklist),
        std::set<std::string>(o.positive_categories.begin(), o.positive_categories.end()));
  }

  ttk::ModelObserver observer;
  if (!o.snapshots.empty()) {
    fs::create_directories(o.snapshots);
    observer = [&](const ttk::Model& m) {
      ttk::write_model_file(fs::path(o.snapshots) / ("model_gen" + std::to_string(m.generation()) + ".txt"),
                            m.patterns());
    };
  }

  const auto records = ttk::run_tracking(*src, mode, o.window_size, o.learner, observer);
  if (o.out.empty()) {
    ttk::write_report(std::cout, records);
  } else {
    ttk::write_report(fs::path(o.out), records);
  }

  const auto& first = records.front();
  const auto& last = records.back();
  const double decrease = first.tpr > 0 ? (first.tpr - last.tpr) / first.tpr : 0.0;
  std::fprintf(stderr, "windows: %zu  model size: %zu\nfinal tpr: %.6f fpr: %.6f auc: %.6f\ntpr decrease: %.2f%%\n",
               records.size(), last.model_size, last.tpr, last.fpr, last.auc, 100.0 * decrease);
  return kOk;
}

int cmd_bench(const Options& o) {
  auto src = ttk::gen_synthetic(drift_config(o));
  std::vector<std::string> corpus;
  corpus.reserve(o.events);
  for (std::size_t i = 0; i < o.events; ++i) corpus.push_back(src->next()->value);

  std::vector<ttk::BenchRow> rows;
  for (std::size_t k : o.pattern_counts) {
    const auto patterns = ttk::random_literals(k, o.seed);
    rows.push_back(ttk::run_bench(patterns, corpus, o.reps));
  }
  if (o.out.empty()) {
    ttk::write_bench(std::cout, rows);
  } else {
    auto out = open_out(o.out);
    ttk::write_bench(out, rows);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regex indicator learning and drift tracking"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "write a synthetic drifting event stream as TSV");
  add_stream_flags(gen, o);
  gen->add_option("--out", o.out, "output TSV (default stdout)");

  auto* learn = app.add_subcommand("learn", "learn a model separating positives from negatives");
  learn->add_option("--positives", o.positives, "positive strings, one per line")->required()->check(CLI::ExistingFile);
  learn->add_option("--negatives", o.negatives, "negative strings, one per line")->check(CLI::ExistingFile);
  learn->add_option("--out", o.out, "model file (default stdout)");
  add_learner_flags(learn, o);

  auto* track = app.add_subcommand("track", "run windowed tracking and write cumulative metrics");
  add_stream_flags(track, o);
  add_learner_flags(track, o);
  track->add_option("--in", o.in, "events TSV; omit to use the generator")->check(CLI::ExistingFile);
  track->add_option("--window-size", o.window_size, "events per window")->check(CLI::PositiveNumber);
  track->add_option("--mode", o.mode, "naive or adaptive")->check(CLI::IsMember({"naive", "adaptive"}));
  track->add_option("--out", o.out, "metrics CSV (default stdout)");
  track->add_option("--snapshots", o.snapshots, "directory for model_gen<k>.txt files");
  track->add_option("--blacklist", o.blacklist, "category<TAB>domain file used as labels")->check(CLI::ExistingFile);
  track->add_option("--positive-categories", o.positive_categories, "blacklist categories labeled positive")
      ->delimiter(',');

  auto* bench = app.add_subcommand("bench", "compare per-pattern and combined matching throughput");
  bench->add_option("--seed", o.seed, "corpus and pattern seed");
  bench->add_option("--events", o.events, "corpus size");
  bench->add_option("--patterns", o.pattern_counts, "pattern counts to measure")->delimiter(',');
  bench->add_option("--reps", o.reps, "repetitions per measurement (fastest kept)")->check(CLI::PositiveNumber);
  bench->add_option("--out", o.out, "bench CSV (default stdout)");
  bench->callback([&] {
    if (bench->count("--events") == 0) o.events = 10'000;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kOther;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*learn) return cmd_learn(o);
    if (*track) return cmd_track(o);
    if (*bench) return cmd_bench(o);
  } catch (const ttk::DisjointnessViolation& e) {
    std::fprintf(stderr, "error: positives and negatives overlap:\n");
    for (const auto& s : e.strings()) std::fprintf(stderr, "  %s\n", s.c_str());
    return kDisjoint;
  } catch (const ttk::InsufficientStream& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInsufficient;
  } catch (const ttk::CapacityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kCapacity;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kOther;
  }
  return kOther;
}
