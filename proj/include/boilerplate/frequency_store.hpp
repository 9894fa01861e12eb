#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "boilerplate/crc64.hpp"
#include "boilerplate/generalized_majority.hpp"

namespace boilerplate {

inline constexpr std::uint64_t kDefaultThreshold = 10;

enum class Backend { exact, crc64, kbit, gm, frequent_set };

std::string_view to_string(Backend backend) noexcept;
std::optional<Backend> parse_backend(std::string_view name) noexcept;

struct KBitConfig {
  unsigned hash_bits = 23;
  unsigned counter_width = 8;  // 1..8, saturating
  bool morris = false;
  std::uint64_t seed = 0;  // drives Morris increments only
};

struct GmConfig {
  std::size_t counters = 100000;
  std::uint64_t report_threshold = 5;  // on the residual counter, not the true count
  bool store_keys = false;             // monitor CRC-64 keys instead of texts
};

struct StoreConfig {
  Backend backend = Backend::exact;
  std::uint64_t threshold = kDefaultThreshold;  // K: frequent iff count >= K
  KBitConfig kbit;
  GmConfig gm;
};

/// One `count<TAB>line` record of a frequent-line list.
struct FrequentLine {
  std::uint64_t count = 0;
  std::string text;

  friend bool operator==(const FrequentLine&, const FrequentLine&) = default;
};

/// Pass-1 accumulator and pass-2 oracle for "is this line frequent?".
///
/// Lines are recorded until seal(); afterwards the store only answers
/// queries, which are safe to issue from many threads.
class FrequencyStore {
 public:
  explicit FrequencyStore(std::uint64_t threshold) : threshold_(threshold) {}
  virtual ~FrequencyStore() = default;

  FrequencyStore(const FrequencyStore&) = delete;
  FrequencyStore& operator=(const FrequencyStore&) = delete;

  virtual Backend backend() const noexcept = 0;

  void record(std::string_view line);
  void seal();
  bool sealed() const noexcept { return sealed_; }
  bool is_frequent(std::string_view line) const;

  /// Folds another unsealed store of the same backend and parameters into
  /// this one. Exact for every backend except GM and Morris counters.
  void merge(const FrequencyStore& other);

  /// Writes the sealed store in the index format read by load_store().
  void save(std::ostream& out) const;

  std::uint64_t threshold() const noexcept { return threshold_; }

  /// Human-readable backend parameters, e.g. "K=10 k_bits=23".
  virtual std::string describe() const;

 protected:
  virtual void do_record(std::string_view line) = 0;
  virtual void do_seal() {}
  virtual bool do_is_frequent(std::string_view line) const = 0;
  virtual void do_merge(const FrequencyStore& other) = 0;
  virtual void do_save(std::ostream& out) const = 0;

 private:
  std::uint64_t threshold_;
  bool sealed_ = false;
};

/// Per-text counters.
class ExactStore final : public FrequencyStore {
 public:
  using FrequencyStore::FrequencyStore;
  using Counts = std::unordered_map<std::string, std::uint64_t, StringHash, std::equal_to<>>;

  Backend backend() const noexcept override { return Backend::exact; }

  std::uint64_t count(std::string_view line) const;
  const Counts& counts() const noexcept { return counts_; }
  void add(std::string_view line, std::uint64_t count);

  /// Lines with count >= K, sorted by text bytes.
  std::vector<FrequentLine> frequent_lines() const;

 protected:
  void do_record(std::string_view line) override;
  bool do_is_frequent(std::string_view line) const override;
  void do_merge(const FrequencyStore& other) override;
  void do_save(std::ostream& out) const override;

 private:
  Counts counts_;
};

/// Per-checksum counters.
class Crc64Store final : public FrequencyStore {
 public:
  using FrequencyStore::FrequencyStore;

  Backend backend() const noexcept override { return Backend::crc64; }

  std::uint64_t count(std::string_view line) const;
  void add(LineKey key, std::uint64_t count);
  std::size_t distinct() const noexcept { return counts_.size(); }

 protected:
  void do_record(std::string_view line) override;
  bool do_is_frequent(std::string_view line) const override;
  void do_merge(const FrequencyStore& other) override;
  void do_save(std::ostream& out) const override;

 private:
  std::unordered_map<LineKey, std::uint64_t> counts_;
};

/// Morris step: increments with probability 2^-counter, where `uniform` is a
/// sample from [0, 1). A counter at `max_value` stays there.
std::uint8_t morris_increment(std::uint8_t counter, double uniform,
                              std::uint8_t max_value = 255) noexcept;

/// Count estimate 2^counter - 1.
double morris_estimate(std::uint8_t counter) noexcept;

/// 2^k small counters indexed by the low k bits of the CRC-64 key.
class KBitStore final : public FrequencyStore {
 public:
  KBitStore(std::uint64_t threshold, const KBitConfig& config);

  Backend backend() const noexcept override { return Backend::kbit; }
  std::string describe() const override;

  const KBitConfig& config() const noexcept { return config_; }
  std::size_t slot(std::string_view line) const noexcept;
  std::uint8_t counter_at(std::size_t slot) const { return counters_.at(slot); }
  void set_counter(std::size_t slot, std::uint8_t value);
  std::uint8_t max_counter() const noexcept { return max_; }

 protected:
  void do_record(std::string_view line) override;
  bool do_is_frequent(std::string_view line) const override;
  void do_merge(const FrequencyStore& other) override;
  void do_save(std::ostream& out) const override;

 private:
  KBitConfig config_;
  std::uint8_t max_;
  std::vector<std::uint8_t> counters_;
  std::mt19937_64 rng_;
};

/// Generalized Majority over line texts (or their keys). Sealing keeps the
/// items whose residual counter reaches the report threshold.
class GmStore final : public FrequencyStore {
 public:
  GmStore(std::uint64_t threshold, const GmConfig& config);

  Backend backend() const noexcept override { return Backend::gm; }
  std::string describe() const override;

  const GmConfig& config() const noexcept { return config_; }

  /// Monitored (item, counter) pairs. Key-mode items are 16-digit hex keys.
  std::vector<std::pair<std::string, std::uint64_t>> monitored() const;
  std::size_t survivors() const noexcept;

  /// Reinstates a survivor read back from an index file.
  void add_survivor(std::string_view item);

 protected:
  void do_record(std::string_view line) override;
  void do_seal() override;
  bool do_is_frequent(std::string_view line) const override;
  void do_merge(const FrequencyStore& other) override;
  void do_save(std::ostream& out) const override;

 private:
  using KeyMajority = GeneralizedMajority<std::uint64_t>;

  GmConfig config_;
  std::variant<StringMajority, KeyMajority> state_;
  std::unordered_set<std::string, StringHash, std::equal_to<>> text_survivors_;
  std::unordered_set<std::uint64_t> key_survivors_;
};

/// Read-only set of frequent texts, e.g. loaded from a frequent-line list or
/// produced by the external sort.
class FrequentSetStore final : public FrequencyStore {
 public:
  explicit FrequentSetStore(std::uint64_t threshold, std::span<const FrequentLine> lines = {});

  Backend backend() const noexcept override { return Backend::frequent_set; }

  std::size_t size() const noexcept { return lines_.size(); }

 protected:
  void do_record(std::string_view line) override;
  bool do_is_frequent(std::string_view line) const override;
  void do_merge(const FrequencyStore& other) override;
  void do_save(std::ostream& out) const override;

 private:
  std::unordered_map<std::string, std::uint64_t, StringHash, std::equal_to<>> lines_;
};

std::unique_ptr<FrequencyStore> make_store(const StoreConfig& config);

/// Reads an index written by FrequencyStore::save(). The result is sealed.
std::unique_ptr<FrequencyStore> load_store(std::istream& in);

/// Frequent-line list I/O: `count<TAB>line` per record, LF-terminated, sorted
/// by line bytes.
void write_frequent_lines(std::ostream& out, std::span<const FrequentLine> lines);
std::vector<FrequentLine> read_frequent_lines(std::istream& in);

using FrequencyQuery = std::function<bool(std::string_view)>;

/// Query adaptor over a sealed store; the store must outlive it.
FrequencyQuery query_of(const FrequencyStore& store);

}  // namespace boilerplate
