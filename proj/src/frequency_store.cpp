#include "boilerplate/frequency_store.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "boilerplate/errors.hpp"
#include "boilerplate/random.hpp"

namespace boilerplate {

namespace {

constexpr std::string_view kIndexMagic = "boilerplate-index";
constexpr int kIndexVersion = 1;

std::string hex_key(std::uint64_t key) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(key));
  return buf;
}

template <typename T>
T parse_number(std::string_view text, int base = 10) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("malformed number in index: '" + std::string(text) + "'");
  }
  return value;
}

// Splits "a<TAB>b" at the first tab.
std::pair<std::string_view, std::string_view> split_tab(std::string_view line) {
  const auto tab = line.find('\t');
  if (tab == std::string_view::npos) {
    throw ConfigError("missing tab in record: '" + std::string(line) + "'");
  }
  return {line.substr(0, tab), line.substr(tab + 1)};
}

template <typename Store>
const Store& same_kind(const FrequencyStore& self, const FrequencyStore& other) {
  const auto* typed = dynamic_cast<const Store*>(&other);
  if (typed == nullptr || other.threshold() != self.threshold()) {
    throw ConfigError("cannot merge stores of different backends or thresholds");
  }
  return *typed;
}

}  // namespace

std::string_view to_string(Backend backend) noexcept {
  switch (backend) {
    case Backend::exact:
      return "exact";
    case Backend::crc64:
      return "crc64";
    case Backend::kbit:
      return "kbit";
    case Backend::gm:
      return "gm";
    case Backend::frequent_set:
      return "frequent-set";
  }
  return "unknown";
}

std::optional<Backend> parse_backend(std::string_view name) noexcept {
  for (auto b : {Backend::exact, Backend::crc64, Backend::kbit, Backend::gm, Backend::frequent_set}) {
    if (to_string(b) == name) return b;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

void FrequencyStore::record(std::string_view line) {
  if (sealed_) throw UsageError("record() after seal()");
  do_record(line);
}

void FrequencyStore::seal() {
  if (sealed_) return;
  do_seal();
  sealed_ = true;
}

bool FrequencyStore::is_frequent(std::string_view line) const {
  if (!sealed_) throw UsageError("is_frequent() before seal()");
  return do_is_frequent(line);
}

void FrequencyStore::merge(const FrequencyStore& other) {
  if (sealed_ || other.sealed_) throw UsageError("merge() needs unsealed stores");
  if (&other == this) throw UsageError("cannot merge a store into itself");
  do_merge(other);
}

void FrequencyStore::save(std::ostream& out) const {
  if (!sealed_) throw UsageError("save() before seal()");
  out << kIndexMagic << ' ' << kIndexVersion << ' ' << to_string(backend()) << ' ' << describe()
      << '\n';
  do_save(out);
}

std::string FrequencyStore::describe() const { return "K=" + std::to_string(threshold_); }

// ---------------------------------------------------------------------------

std::uint64_t ExactStore::count(std::string_view line) const {
  auto it = counts_.find(line);
  return it == counts_.end() ? 0 : it->second;
}

void ExactStore::add(std::string_view line, std::uint64_t count) {
  if (auto it = counts_.find(line); it != counts_.end()) {
    it->second += count;
  } else {
    counts_.emplace(std::string(line), count);
  }
}

void ExactStore::do_record(std::string_view line) { add(line, 1); }

bool ExactStore::do_is_frequent(std::string_view line) const { return count(line) >= threshold(); }

void ExactStore::do_merge(const FrequencyStore& other) {
  for (const auto& [text, n] : same_kind<ExactStore>(*this, other).counts_) add(text, n);
}

std::vector<FrequentLine> ExactStore::frequent_lines() const {
  std::vector<FrequentLine> out;
  for (const auto& [text, n] : counts_) {
    if (n >= threshold()) out.push_back({n, text});
  }
  std::sort(out.begin(), out.end(),
            [](const FrequentLine& a, const FrequentLine& b) { return a.text < b.text; });
  return out;
}

void ExactStore::do_save(std::ostream& out) const {
  std::vector<FrequentLine> all;
  all.reserve(counts_.size());
  for (const auto& [text, n] : counts_) all.push_back({n, text});
  std::sort(all.begin(), all.end(),
            [](const FrequentLine& a, const FrequentLine& b) { return a.text < b.text; });
  write_frequent_lines(out, all);
}

// ---------------------------------------------------------------------------

std::uint64_t Crc64Store::count(std::string_view line) const {
  auto it = counts_.find(line_key(line));
  return it == counts_.end() ? 0 : it->second;
}

void Crc64Store::add(LineKey key, std::uint64_t count) { counts_[key] += count; }

void Crc64Store::do_record(std::string_view line) { ++counts_[line_key(line)]; }

bool Crc64Store::do_is_frequent(std::string_view line) const { return count(line) >= threshold(); }

void Crc64Store::do_merge(const FrequencyStore& other) {
  for (const auto& [key, n] : same_kind<Crc64Store>(*this, other).counts_) counts_[key] += n;
}

void Crc64Store::do_save(std::ostream& out) const {
  std::vector<std::pair<LineKey, std::uint64_t>> all(counts_.begin(), counts_.end());
  std::sort(all.begin(), all.end());
  for (const auto& [key, n] : all) out << hex_key(key.value) << '\t' << n << '\n';
}

// ---------------------------------------------------------------------------

std::uint8_t morris_increment(std::uint8_t counter, double uniform,
                              std::uint8_t max_value) noexcept {
  if (counter >= max_value) return counter;
  return uniform < std::ldexp(1.0, -static_cast<int>(counter)) ? counter + 1 : counter;
}

double morris_estimate(std::uint8_t counter) noexcept {
  return std::ldexp(1.0, counter) - 1.0;
}

KBitStore::KBitStore(std::uint64_t threshold, const KBitConfig& config)
    : FrequencyStore(threshold), config_(config), rng_(config.seed) {
  if (config.hash_bits < 1 || config.hash_bits > 32) {
    throw ConfigError("k-bit hash width must be in [1, 32]");
  }
  if (config.counter_width < 1 || config.counter_width > 8) {
    throw ConfigError("counter width must be in [1, 8] bits");
  }
  max_ = static_cast<std::uint8_t>((1u << config.counter_width) - 1);
  if (!config.morris && threshold > max_) {
    throw ConfigError("threshold exceeds the saturating counter range; enable Morris counting");
  }
  counters_.assign(std::size_t{1} << config.hash_bits, 0);
}

std::string KBitStore::describe() const {
  std::ostringstream os;
  os << FrequencyStore::describe() << " k_bits=" << config_.hash_bits
     << " counter_width=" << config_.counter_width << " morris=" << (config_.morris ? 1 : 0)
     << " seed=" << config_.seed;
  return os.str();
}

std::size_t KBitStore::slot(std::string_view line) const noexcept {
  return static_cast<std::size_t>(crc64(line) & (counters_.size() - 1));
}

void KBitStore::set_counter(std::size_t slot, std::uint8_t value) {
  counters_.at(slot) = std::min(value, max_);
}

void KBitStore::do_record(std::string_view line) {
  auto& c = counters_[slot(line)];
  if (config_.morris) {
    c = morris_increment(c, uniform01(rng_), max_);
  } else if (c < max_) {
    ++c;
  }
}

bool KBitStore::do_is_frequent(std::string_view line) const {
  const auto c = counters_[slot(line)];
  if (config_.morris) return morris_estimate(c) >= static_cast<double>(threshold());
  return c >= threshold();
}

void KBitStore::do_merge(const FrequencyStore& other) {
  const auto& rhs = same_kind<KBitStore>(*this, other);
  if (rhs.config_.hash_bits != config_.hash_bits ||
      rhs.config_.counter_width != config_.counter_width || rhs.config_.morris != config_.morris) {
    throw ConfigError("cannot merge k-bit stores with different layouts");
  }
  for (std::size_t i = 0; i < counters_.size(); ++i) {
    if (config_.morris) {
      // Approximate: re-encode the summed estimates.
      const double total = morris_estimate(counters_[i]) + morris_estimate(rhs.counters_[i]);
      const auto c = static_cast<unsigned>(std::floor(std::log2(total + 1.0)));
      counters_[i] = static_cast<std::uint8_t>(std::min<unsigned>(c, max_));
    } else {
      counters_[i] = static_cast<std::uint8_t>(
          std::min<unsigned>(unsigned{counters_[i]} + rhs.counters_[i], max_));
    }
  }
}

void KBitStore::do_save(std::ostream& out) const {
  for (std::size_t i = 0; i < counters_.size(); ++i) {
    if (counters_[i] != 0) out << i << '\t' << unsigned{counters_[i]} << '\n';
  }
}

// ---------------------------------------------------------------------------

GmStore::GmStore(std::uint64_t threshold, const GmConfig& config)
    : FrequencyStore(threshold),
      config_(config),
      state_(config.store_keys ? decltype(state_)(std::in_place_type<KeyMajority>, config.counters)
                               : decltype(state_)(std::in_place_type<StringMajority>,
                                                  config.counters)) {}

std::string GmStore::describe() const {
  std::ostringstream os;
  os << FrequencyStore::describe() << " gm_counters=" << config_.counters
     << " gm_threshold=" << config_.report_threshold << " gm_keys=" << (config_.store_keys ? 1 : 0);
  return os.str();
}

std::vector<std::pair<std::string, std::uint64_t>> GmStore::monitored() const {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  if (const auto* texts = std::get_if<StringMajority>(&state_)) {
    for (auto& [item, n] : texts->monitored()) out.emplace_back(item, n);
  } else {
    for (auto& [key, n] : std::get<KeyMajority>(state_).monitored()) out.emplace_back(hex_key(key), n);
  }
  return out;
}

std::size_t GmStore::survivors() const noexcept {
  return config_.store_keys ? key_survivors_.size() : text_survivors_.size();
}

void GmStore::add_survivor(std::string_view item) {
  if (config_.store_keys) {
    key_survivors_.insert(parse_number<std::uint64_t>(item, 16));
  } else {
    text_survivors_.emplace(item);
  }
}

void GmStore::do_record(std::string_view line) {
  if (auto* texts = std::get_if<StringMajority>(&state_)) {
    texts->offer(line);
  } else {
    std::get<KeyMajority>(state_).offer(crc64(line));
  }
}

void GmStore::do_seal() {
  if (auto* texts = std::get_if<StringMajority>(&state_)) {
    for (auto& [item, n] : texts->monitored()) {
      if (n >= config_.report_threshold) text_survivors_.insert(item);
    }
  } else {
    for (auto& [key, n] : std::get<KeyMajority>(state_).monitored()) {
      if (n >= config_.report_threshold) key_survivors_.insert(key);
    }
  }
}

bool GmStore::do_is_frequent(std::string_view line) const {
  if (config_.store_keys) return key_survivors_.contains(crc64(line));
  return text_survivors_.find(line) != text_survivors_.end();
}

void GmStore::do_merge(const FrequencyStore& other) {
  const auto& rhs = same_kind<GmStore>(*this, other);
  if (rhs.config_.store_keys != config_.store_keys || rhs.config_.counters != config_.counters) {
    throw ConfigError("cannot merge GM stores with different layouts");
  }
  // Replays the other summary's counters: an approximation of running GM
  // over the concatenated streams.
  if (auto* texts = std::get_if<StringMajority>(&state_)) {
    for (auto& [item, n] : std::get<StringMajority>(rhs.state_).monitored()) texts->offer(item, n);
  } else {
    auto& keys = std::get<KeyMajority>(state_);
    for (auto& [key, n] : std::get<KeyMajority>(rhs.state_).monitored()) keys.offer(key, n);
  }
}

void GmStore::do_save(std::ostream& out) const {
  std::vector<std::string> items;
  if (config_.store_keys) {
    for (auto key : key_survivors_) items.push_back(hex_key(key));
  } else {
    items.assign(text_survivors_.begin(), text_survivors_.end());
  }
  std::sort(items.begin(), items.end());
  for (const auto& item : items) out << item << '\n';
}

// ---------------------------------------------------------------------------

FrequentSetStore::FrequentSetStore(std::uint64_t threshold, std::span<const FrequentLine> lines)
    : FrequencyStore(threshold) {
  for (const auto& line : lines) {
    if (line.count >= threshold) lines_[line.text] += line.count;
  }
  seal();
}

void FrequentSetStore::do_record(std::string_view) {}

bool FrequentSetStore::do_is_frequent(std::string_view line) const {
  return lines_.find(line) != lines_.end();
}

void FrequentSetStore::do_merge(const FrequencyStore&) {}

void FrequentSetStore::do_save(std::ostream& out) const {
  std::vector<FrequentLine> all;
  for (const auto& [text, n] : lines_) all.push_back({n, text});
  std::sort(all.begin(), all.end(),
            [](const FrequentLine& a, const FrequentLine& b) { return a.text < b.text; });
  write_frequent_lines(out, all);
}

// ---------------------------------------------------------------------------

std::unique_ptr<FrequencyStore> make_store(const StoreConfig& config) {
  if (config.threshold == 0) throw ConfigError("threshold K must be at least 1");
  switch (config.backend) {
    case Backend::exact:
      return std::make_unique<ExactStore>(config.threshold);
    case Backend::crc64:
      return std::make_unique<Crc64Store>(config.threshold);
    case Backend::kbit:
      return std::make_unique<KBitStore>(config.threshold, config.kbit);
    case Backend::gm:
      return std::make_unique<GmStore>(config.threshold, config.gm);
    case Backend::frequent_set:
      return std::make_unique<FrequentSetStore>(config.threshold);
  }
  throw ConfigError("unknown backend");
}

std::unique_ptr<FrequencyStore> load_store(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ConfigError("empty index");
  std::istringstream hs(header);
  std::string magic, name;
  int version = 0;
  hs >> magic >> version >> name;
  if (magic != kIndexMagic || version != kIndexVersion) throw ConfigError("not an index file");
  const auto backend = parse_backend(name);
  if (!backend) throw ConfigError("unknown backend in index: " + name);

  std::map<std::string, std::string, std::less<>> params;
  for (std::string token; hs >> token;) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ConfigError("malformed index header");
    params[token.substr(0, eq)] = token.substr(eq + 1);
  }
  auto param = [&](std::string_view key) -> std::uint64_t {
    auto it = params.find(key);
    if (it == params.end()) throw ConfigError("index header lacks " + std::string(key));
    return parse_number<std::uint64_t>(it->second);
  };

  StoreConfig config;
  config.backend = *backend;
  config.threshold = param("K");
  if (*backend == Backend::kbit) {
    config.kbit.hash_bits = static_cast<unsigned>(param("k_bits"));
    config.kbit.counter_width = static_cast<unsigned>(param("counter_width"));
    config.kbit.morris = param("morris") != 0;
    config.kbit.seed = param("seed");
  } else if (*backend == Backend::gm) {
    config.gm.counters = param("gm_counters");
    config.gm.report_threshold = param("gm_threshold");
    config.gm.store_keys = param("gm_keys") != 0;
  }

  if (*backend == Backend::frequent_set) {
    auto lines = read_frequent_lines(in);
    return std::make_unique<FrequentSetStore>(config.threshold, lines);
  }

  auto store = make_store(config);
  std::string line;
  switch (*backend) {
    case Backend::exact: {
      auto& exact = static_cast<ExactStore&>(*store);
      for (auto& rec : read_frequent_lines(in)) exact.add(rec.text, rec.count);
      break;
    }
    case Backend::crc64: {
      auto& crc = static_cast<Crc64Store&>(*store);
      while (std::getline(in, line)) {
        auto [key, n] = split_tab(line);
        crc.add(LineKey{parse_number<std::uint64_t>(key, 16)}, parse_number<std::uint64_t>(n));
      }
      break;
    }
    case Backend::kbit: {
      auto& kbit = static_cast<KBitStore&>(*store);
      while (std::getline(in, line)) {
        auto [slot, n] = split_tab(line);
        kbit.set_counter(parse_number<std::size_t>(slot),
                         static_cast<std::uint8_t>(parse_number<unsigned>(n)));
      }
      break;
    }
    case Backend::gm: {
      auto& gm = static_cast<GmStore&>(*store);
      while (std::getline(in, line)) gm.add_survivor(line);
      gm.seal();
      return store;
    }
    case Backend::frequent_set:
      break;
  }
  store->seal();
  return store;
}

void write_frequent_lines(std::ostream& out, std::span<const FrequentLine> lines) {
  for (const auto& line : lines) out << line.count << '\t' << line.text << '\n';
}

std::vector<FrequentLine> read_frequent_lines(std::istream& in) {
  std::vector<FrequentLine> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    auto [count, text] = split_tab(line);
    out.push_back({parse_number<std::uint64_t>(count), std::string(text)});
  }
  return out;
}

FrequencyQuery query_of(const FrequencyStore& store) {
  return [&store](std::string_view line) { return store.is_frequent(line); };
}

}  // namespace boilerplate
