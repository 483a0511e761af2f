#include "ttk/stream.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include "ttk/errors.hpp"

namespace ttk {

std::optional<Event> VectorSource::next() {
  if (pos_ >= events_.size()) return std::nullopt;
  return events_[pos_++];
}

std::optional<Event> LimitedSource::next() {
  if (remaining_ == 0) return std::nullopt;
  --remaining_;
  return inner_->next();
}

// ---------------------------------------------------------------------------

std::vector<Event> read_tsv(std::istream& in) {
  std::vector<Event> events;
  std::unordered_map<std::string, int> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (;;) {
      const auto tab = rest.find('\t');
      fields.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (fields.size() != 3) throw ParseError(line_no, "expected 3 tab-separated fields");

    Event e;
    const auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), e.seq);
    if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size()) {
      throw ParseError(line_no, "bad sequence number");
    }
    if (fields[1].empty()) throw ParseError(line_no, "empty value");
    e.value = std::string(fields[1]);
    if (fields[2] == "0") {
      e.truth = 0;
    } else if (fields[2] == "1") {
      e.truth = 1;
    } else {
      throw ParseError(line_no, "label must be 0 or 1");
    }

    auto [it, inserted] = labels.try_emplace(e.value, e.truth);
    if (!inserted && it->second != e.truth) {
      throw LabelError("value '" + e.value + "' labeled both 0 and 1 (line " + std::to_string(line_no) + ")");
    }
    events.push_back(std::move(e));
  }
  return events;
}

std::unique_ptr<EventSource> load_tsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return std::make_unique<VectorSource>(read_tsv(in));
}

void write_tsv(std::ostream& out, std::span<const Event> events) {
  for (const Event& e : events) out << e.seq << '\t' << e.value << '\t' << e.truth << '\n';
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::string_view, 4> kTlds = {"com", "net", "org", "io"};
constexpr std::size_t kMinToken = 5;
constexpr std::size_t kMaxToken = 8;
constexpr std::size_t kTokenCap = 12;

}  // namespace

void DriftConfig::validate() const {
  if (!(positive_frac >= 0.0 && positive_frac <= 1.0)) throw std::invalid_argument("positive_frac must be in [0,1]");
  if (!(drift_rate >= 0.0 && drift_rate <= 1.0)) throw std::invalid_argument("drift_rate must be in [0,1]");
  if (n_pos_seeds == 0 || n_neg_seeds == 0) throw std::invalid_argument("token pools must be non-empty");
  if (window_hint == 0) throw std::invalid_argument("window_hint must be positive");
  if (pos_min_len == 0 || pos_min_len > pos_max_len || pos_max_len > kTokenCap) {
    throw std::invalid_argument("positive token lengths must satisfy 1 <= min <= max <= 12");
  }
  if (suffix_range == 0) throw std::invalid_argument("suffix_range must be positive");
  if (!(lookalike_frac >= 0.0 && lookalike_frac <= 1.0)) throw std::invalid_argument("lookalike_frac must be in [0,1]");
  const double total = mutation.substitution + mutation.insertion + mutation.suffix_swap + mutation.rotation;
  if (mutation.substitution < 0 || mutation.insertion < 0 || mutation.suffix_swap < 0 || mutation.rotation < 0 ||
      !(total > 0)) {
    throw std::invalid_argument("mutation weights must be non-negative with a positive sum");
  }
}

SyntheticSource::SyntheticSource(const DriftConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
  cfg_.validate();
  std::set<std::string> used;
  while (pos_tokens_.size() < cfg_.n_pos_seeds) {
    auto t = random_token(cfg_.pos_min_len, cfg_.pos_max_len);
    if (used.insert(t).second) pos_tokens_.push_back(std::move(t));
  }
  const auto lookalikes = static_cast<std::size_t>(cfg_.lookalike_frac * static_cast<double>(cfg_.n_neg_seeds));
  while (neg_tokens_.size() < cfg_.n_neg_seeds) {
    std::string t;
    if (neg_tokens_.size() < lookalikes) {
      // A random token carrying a short fragment of a positive seed.
      const std::string& seed = pos_tokens_[below(pos_tokens_.size())];
      const std::size_t len = std::min<std::size_t>(seed.size(), 3 + below(2));
      const std::string fragment = seed.substr(below(seed.size() - len + 1), len);
      t = random_token(kMinToken - 2, kMaxToken - 3);
      t.insert(below(t.size() + 1), fragment);
    } else {
      t = random_token(kMinToken, kMaxToken);
    }
    if (used.insert(t).second) neg_tokens_.push_back(std::move(t));
  }
  neg_lookup_.insert(neg_tokens_.begin(), neg_tokens_.end());
}

// Plain modulo and shift arithmetic on the engine output keeps streams
// identical across standard libraries.
std::uint64_t SyntheticSource::below(std::uint64_t n) { return rng_() % n; }

double SyntheticSource::unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

std::string SyntheticSource::random_token(std::size_t min_len, std::size_t max_len) {
  std::string t(min_len + below(max_len - min_len + 1), 'a');
  for (char& c : t) c = static_cast<char>('a' + below(26));
  return t;
}

std::string SyntheticSource::mutate(const std::string& token) {
  const auto& w = cfg_.mutation;
  const double total = w.substitution + w.insertion + w.suffix_swap + w.rotation;
  double pick = unit() * total;
  std::string t = token;
  auto letter = [&] { return static_cast<char>('a' + below(26)); };

  if ((pick -= w.substitution) < 0) {
    t[below(t.size())] = letter();
  } else if ((pick -= w.insertion) < 0) {
    if (t.size() < kTokenCap) {
      t.insert(t.begin() + static_cast<std::ptrdiff_t>(below(t.size() + 1)), letter());
    } else {
      t[below(t.size())] = letter();
    }
  } else if ((pick -= w.suffix_swap) < 0) {
    const std::size_t tail = std::min<std::size_t>(2, t.size());
    for (std::size_t i = t.size() - tail; i < t.size(); ++i) t[i] = letter();
  } else {
    std::rotate(t.begin(), t.begin() + 1, t.end());
  }
  return t;
}

void SyntheticSource::drift() {
  for (auto& token : pos_tokens_) {
    if (unit() >= cfg_.drift_rate) continue;
    // A mutation that lands on a negative token is redrawn so labels stay fixed.
    for (;;) {
      std::string candidate = mutate(token);
      if (!neg_lookup_.contains(candidate)) {
        token = std::move(candidate);
        break;
      }
    }
  }
}

std::optional<Event> SyntheticSource::next() {
  if (seq_ > 0 && seq_ % cfg_.window_hint == 0) drift();
  Event e;
  e.seq = seq_++;
  e.truth = unit() < cfg_.positive_frac ? 1 : 0;
  const auto& pool = e.truth ? pos_tokens_ : neg_tokens_;
  e.value = pool[below(pool.size())];
  e.value += std::to_string(below(cfg_.suffix_range));
  e.value += '.';
  e.value += kTlds[below(kTlds.size())];
  return e;
}

std::unique_ptr<EventSource> gen_synthetic(const DriftConfig& cfg) { return std::make_unique<SyntheticSource>(cfg); }

// ---------------------------------------------------------------------------

Blacklist Blacklist::parse(std::istream& in) {
  Blacklist bl;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(line_no, "expected category<TAB>domain");
    }
    bl.add(line.substr(0, tab), line.substr(tab + 1));
  }
  return bl;
}

Blacklist Blacklist::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open blacklist " + path.string());
  return parse(in);
}

void Blacklist::add(std::string category, std::string domain) {
  by_domain_[std::move(domain)].insert(std::move(category));
}

const std::set<std::string>* Blacklist::categories_of(std::string_view domain) const {
  auto it = by_domain_.find(domain);
  return it == by_domain_.end() ? nullptr : &it->second;
}

int bootstrap_label(std::string_view value, const Blacklist& blacklist,
                    const std::set<std::string>& positive_categories) {
  // Try value itself, then each parent domain at a '.' boundary.
  for (std::string_view d = value; !d.empty();) {
    if (const auto* cats = blacklist.categories_of(d)) {
      for (const auto& c : *cats) {
        if (positive_categories.contains(c)) return 1;
      }
    }
    const auto dot = d.find('.');
    if (dot == std::string_view::npos) break;
    d.remove_prefix(dot + 1);
  }
  return 0;
}

}  // namespace ttk
