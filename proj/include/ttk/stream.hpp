#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ttk {

struct Event {
  std::uint64_t seq = 0;
  std::string value;
  int truth = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

// Sequential producer of labeled events. Single consumer.
class EventSource {
 public:
  virtual ~EventSource() = default;
  // std::nullopt once the source is exhausted.
  virtual std::optional<Event> next() = 0;
};

class VectorSource final : public EventSource {
 public:
  explicit VectorSource(std::vector<Event> events) : events_(std::move(events)) {}
  std::optional<Event> next() override;

 private:
  std::vector<Event> events_;
  std::size_t pos_ = 0;
};

// Yields at most `limit` events from `inner`.
class LimitedSource final : public EventSource {
 public:
  LimitedSource(std::unique_ptr<EventSource> inner, std::size_t limit)
      : inner_(std::move(inner)), remaining_(limit) {}
  std::optional<Event> next() override;

 private:
  std::unique_ptr<EventSource> inner_;
  std::size_t remaining_;
};

// ---------------------------------------------------------------------------
// TSV: "seq<TAB>value<TAB>label\n", label in {0,1}, no header.

// Throws ParseError on malformed rows and LabelError when a value carries
// two different labels.
std::vector<Event> read_tsv(std::istream& in);
std::unique_ptr<EventSource> load_tsv(const std::filesystem::path& path);
void write_tsv(std::ostream& out, std::span<const Event> events);

// ---------------------------------------------------------------------------
// Synthetic drifting stream

struct MutationWeights {
  double substitution = 1.0;
  double insertion = 1.0;
  double suffix_swap = 1.0;
  double rotation = 1.0;
};

struct DriftConfig {
  double positive_frac = 0.34;
  // Per-step probability that each positive token mutates.
  double drift_rate = 0.04;
  MutationWeights mutation;
  std::size_t n_pos_seeds = 24;
  std::size_t n_neg_seeds = 2000;
  // Length range of positive seed tokens; negative tokens have 5 to 8 letters.
  std::size_t pos_min_len = 8;
  std::size_t pos_max_len = 11;
  // Events between drift steps.
  std::size_t window_hint = 1000;
  // Numeric suffixes appended to tokens are drawn from [0, suffix_range).
  std::size_t suffix_range = 2;
  // Fraction of negative tokens that embed a 3 or 4 letter fragment of a
  // positive seed.
  double lookalike_frac = 0.2;
  std::uint64_t seed = 1;

  // Throws std::invalid_argument.
  void validate() const;
};

// Infinite stream of domain-like values "<token><digits>.<tld>". Positive
// values use the positive token pool, which drifts: every window_hint
// events each positive token mutates with probability drift_rate. Positive
// and negative token pools never share a token, so a value's label is fixed.
class SyntheticSource final : public EventSource {
 public:
  explicit SyntheticSource(const DriftConfig& cfg);
  std::optional<Event> next() override;

  const std::vector<std::string>& positive_tokens() const noexcept { return pos_tokens_; }
  const std::vector<std::string>& negative_tokens() const noexcept { return neg_tokens_; }

 private:
  std::uint64_t below(std::uint64_t n);
  double unit();
  std::string random_token(std::size_t min_len, std::size_t max_len);
  std::string mutate(const std::string& token);
  void drift();

  DriftConfig cfg_;
  std::mt19937_64 rng_;
  std::vector<std::string> pos_tokens_;
  std::vector<std::string> neg_tokens_;
  std::set<std::string> neg_lookup_;
  std::uint64_t seq_ = 0;
};

std::unique_ptr<EventSource> gen_synthetic(const DriftConfig& cfg);

// ---------------------------------------------------------------------------
// Blacklist bootstrap labels

// Category map loaded from "category<TAB>domain" lines.
class Blacklist {
 public:
  static Blacklist load(const std::filesystem::path& path);
  static Blacklist parse(std::istream& in);

  void add(std::string category, std::string domain);
  // Categories listing `domain` exactly.
  const std::set<std::string>* categories_of(std::string_view domain) const;

 private:
  std::map<std::string, std::set<std::string>, std::less<>> by_domain_;
};

// 1 iff value, or one of its parent domains, is listed under a positive
// category.
int bootstrap_label(std::string_view value, const Blacklist& blacklist,
                    const std::set<std::string>& positive_categories);

}  // namespace ttk
