#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "boilerplate/errors.hpp"
#include "boilerplate/frequency_store.hpp"
#include "boilerplate/random.hpp"

using namespace boilerplate;

namespace {

std::string line_of(std::size_t i) { return "a line that is long enough to count, id " + std::to_string(i); }

// Random multiset of lines with a heavy head: line i appears about 400/(i+1) times.
std::vector<std::string> skewed_lines(std::uint64_t seed, std::size_t distinct) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < distinct; ++i) {
    const std::size_t copies = 1 + (400 / (i + 1)) + rng() % 3;
    out.insert(out.end(), copies, line_of(i));
  }
  shuffle(std::span(out), rng);
  return out;
}

std::unique_ptr<FrequencyStore> filled(const StoreConfig& cfg, const std::vector<std::string>& lines) {
  auto s = make_store(cfg);
  for (const auto& l : lines) s->record(l);
  s->seal();
  return s;
}

StoreConfig config(Backend b, std::uint64_t k = 10) {
  StoreConfig c;
  c.backend = b;
  c.threshold = k;
  return c;
}

}  // namespace

TEST_CASE("exact store counts and threshold boundary") {
  ExactStore s(10);
  const std::string x(31, 'X');
  for (int i = 0; i < 10; ++i) s.record(x);
  const std::string y = line_of(1);
  for (int i = 0; i < 9; ++i) s.record(y);
  CHECK(s.count(x) == 10);
  CHECK_THROWS_AS((void)s.is_frequent(x), UsageError);
  s.seal();
  CHECK(s.is_frequent(x));
  CHECK_FALSE(s.is_frequent(y));
  CHECK_FALSE(s.is_frequent("never recorded at all, but long enough"));
  CHECK_THROWS_AS(s.record(x), UsageError);
  const auto f = s.frequent_lines();
  REQUIRE(f.size() == 1);
  CHECK(f[0] == FrequentLine{10, x});
}

TEST_CASE("crc64 store agrees with the exact store") {
  const auto lines = skewed_lines(1, 2000);
  const auto exact = filled(config(Backend::exact), lines);
  const auto crc = filled(config(Backend::crc64), lines);
  for (std::size_t i = 0; i < 2100; ++i) {
    REQUIRE(exact->is_frequent(line_of(i)) == crc->is_frequent(line_of(i)));
  }
  CHECK(dynamic_cast<const Crc64Store&>(*crc).distinct() == 2000);
}

TEST_CASE("k-bit counters saturate") {
  KBitConfig kc;
  KBitStore s(10, kc);
  const std::string x = line_of(7);
  for (int i = 0; i < 300; ++i) s.record(x);
  CHECK(s.counter_at(s.slot(x)) == 255);
  CHECK(s.max_counter() == 255);

  kc.counter_width = 4;
  KBitStore narrow(10, kc);
  for (int i = 0; i < 300; ++i) narrow.record(x);
  CHECK(narrow.counter_at(narrow.slot(x)) == 15);

  CHECK_THROWS_AS(KBitStore(16, kc), ConfigError);
  kc.morris = true;
  CHECK_NOTHROW(KBitStore(16, kc));
  kc.counter_width = 9;
  CHECK_THROWS_AS(KBitStore(10, kc), ConfigError);
  kc.counter_width = 8;
  kc.hash_bits = 0;
  CHECK_THROWS_AS(KBitStore(10, kc), ConfigError);
}

TEST_CASE("k-bit slot is the low bits of the checksum") {
  KBitConfig kc;
  kc.hash_bits = 12;
  KBitStore s(10, kc);
  for (std::size_t i = 0; i < 100; ++i) CHECK(s.slot(line_of(i)) == (crc64(line_of(i)) & 0xfff));
}

TEST_CASE("k-bit false positive through a shared counter") {
  KBitConfig kc;  // k = 23
  KBitStore s(10, kc);
  const std::string frequent = line_of(0);
  for (int i = 0; i < 10; ++i) s.record(frequent);
  s.seal();
  const auto target = s.slot(frequent);
  std::string collider;
  for (std::size_t i = 1;; ++i) {
    const std::string candidate = "unrelated text that was never recorded " + std::to_string(i);
    if (s.slot(candidate) == target) {
      collider = candidate;
      break;
    }
  }
  CHECK(s.is_frequent(frequent));
  CHECK(s.is_frequent(collider));
}

TEST_CASE("k-bit errors are one-sided") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto lines = skewed_lines(seed, 3000);
    auto cfg = config(Backend::kbit);
    cfg.kbit.hash_bits = 10;  // small table, many collisions
    const auto exact = filled(config(Backend::exact), lines);
    const auto kbit = filled(cfg, lines);
    std::size_t fp = 0;
    for (std::size_t i = 0; i < 3000; ++i) {
      if (exact->is_frequent(line_of(i))) {
        REQUIRE(kbit->is_frequent(line_of(i)));
      } else if (kbit->is_frequent(line_of(i))) {
        ++fp;
      }
    }
    CHECK(fp > 0);
  }
}

TEST_CASE("saturating counters are monotone under more recording") {
  std::mt19937_64 rng(3);
  KBitConfig kc;
  kc.hash_bits = 8;
  kc.counter_width = 4;
  KBitStore s(10, kc);
  std::vector<std::uint8_t> before(256);
  for (int step = 0; step < 5000; ++step) {
    for (std::size_t i = 0; i < 256; ++i) before[i] = s.counter_at(i);
    s.record(line_of(rng() % 1000));
    for (std::size_t i = 0; i < 256; ++i) REQUIRE(s.counter_at(i) >= before[i]);
  }
}

TEST_CASE("morris counter") {
  CHECK(morris_increment(0, 0.999999) == 1);
  CHECK(morris_increment(0, 0.0) == 1);
  CHECK(morris_increment(3, 0.124) == 4);
  CHECK(morris_increment(3, 0.125) == 3);
  CHECK(morris_increment(255, 0.0) == 255);
  CHECK(morris_increment(15, 0.0, 15) == 15);
  CHECK(morris_estimate(0) == 0.0);
  CHECK(morris_estimate(1) == 1.0);
  CHECK(morris_estimate(10) == 1023.0);

  // Unbiased estimator: mean estimate after 1000 increments is close to 1000.
  std::mt19937_64 rng(99);
  double total = 0.0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    std::uint8_t c = 0;
    for (int i = 0; i < 1000; ++i) c = morris_increment(c, uniform01(rng));
    total += morris_estimate(c);
  }
  CHECK(std::abs(total / trials - 1000.0) <= 100.0);
}

TEST_CASE("morris k-bit store recognizes frequent lines") {
  auto cfg = config(Backend::kbit, 100);
  cfg.kbit.morris = true;
  cfg.kbit.counter_width = 4;
  auto s = make_store(cfg);
  for (int i = 0; i < 2000; ++i) s->record(line_of(1));
  s->record(line_of(2));
  s->seal();
  CHECK(s->is_frequent(line_of(1)));
  CHECK_FALSE(s->is_frequent(line_of(2)));
}

TEST_CASE("gm store reports monitored items with large residual counters") {
  GmConfig gc;
  gc.counters = 4;
  gc.report_threshold = 3;
  GmStore s(10, gc);
  for (int i = 0; i < 6; ++i) s.record(line_of(0));
  for (int i = 0; i < 2; ++i) s.record(line_of(1));
  s.seal();
  CHECK(s.is_frequent(line_of(0)));
  CHECK_FALSE(s.is_frequent(line_of(1)));  // monitored, counter 2 < 3
  CHECK_FALSE(s.is_frequent(line_of(5)));  // never monitored
  CHECK(s.survivors() == 1);
  const auto m = s.monitored();
  REQUIRE(m.size() == 2);
  CHECK(m[0] == std::pair<std::string, std::uint64_t>{line_of(0), 6});
}

TEST_CASE("gm key mode matches text mode") {
  const auto lines = skewed_lines(5, 500);
  auto text_cfg = config(Backend::gm);
  text_cfg.gm.counters = 200;
  auto key_cfg = text_cfg;
  key_cfg.gm.store_keys = true;
  const auto a = filled(text_cfg, lines);
  const auto b = filled(key_cfg, lines);
  for (std::size_t i = 0; i < 600; ++i) CHECK(a->is_frequent(line_of(i)) == b->is_frequent(line_of(i)));
}

TEST_CASE("merging shards equals recording everything in one store") {
  const auto lines = skewed_lines(7, 1500);
  for (Backend b : {Backend::exact, Backend::crc64, Backend::kbit}) {
    auto cfg = config(b);
    cfg.kbit.hash_bits = 11;
    const auto whole = filled(cfg, lines);
    auto left = make_store(cfg);
    auto right = make_store(cfg);
    for (std::size_t i = 0; i < lines.size(); ++i) (i % 3 ? left : right)->record(lines[i]);
    left->merge(*right);
    left->seal();
    for (std::size_t i = 0; i < 1600; ++i) {
      REQUIRE(left->is_frequent(line_of(i)) == whole->is_frequent(line_of(i)));
    }
    std::ostringstream a, c;
    left->save(a);
    whole->save(c);
    CHECK(a.str() == c.str());
  }
}

TEST_CASE("merge preconditions") {
  ExactStore a(10), b(10), c(5);
  Crc64Store d(10);
  CHECK_THROWS_AS(a.merge(c), ConfigError);
  CHECK_THROWS_AS(a.merge(d), ConfigError);
  CHECK_THROWS_AS(a.merge(a), UsageError);
  b.seal();
  CHECK_THROWS_AS(a.merge(b), UsageError);
}

TEST_CASE("gm replay merge keeps the heavy hitters") {
  const auto lines = skewed_lines(8, 1000);
  auto cfg = config(Backend::gm);
  cfg.gm.counters = 300;
  auto left = make_store(cfg);
  auto right = make_store(cfg);
  for (std::size_t i = 0; i < lines.size(); ++i) (i % 2 ? left : right)->record(lines[i]);
  left->merge(*right);
  left->seal();
  // Lines 0..19 occur at least 20 times each; far above what c = 300 loses.
  for (std::size_t i = 0; i < 20; ++i) CHECK(left->is_frequent(line_of(i)));
}

TEST_CASE("index save and load round-trip for every backend") {
  const auto lines = skewed_lines(9, 800);
  std::vector<StoreConfig> configs = {config(Backend::exact), config(Backend::crc64),
                                      config(Backend::kbit), config(Backend::gm)};
  configs[2].kbit.hash_bits = 9;
  configs[3].gm.counters = 100;
  auto morris = config(Backend::kbit, 50);
  morris.kbit.morris = true;
  morris.kbit.seed = 4;
  configs.push_back(morris);
  auto keys = configs[3];
  keys.gm.store_keys = true;
  configs.push_back(keys);

  for (const auto& cfg : configs) {
    const auto s = filled(cfg, lines);
    std::stringstream buf;
    s->save(buf);
    const auto loaded = load_store(buf);
    CHECK(loaded->sealed());
    CHECK(loaded->backend() == s->backend());
    CHECK(loaded->threshold() == s->threshold());
    CHECK(loaded->describe() == s->describe());
    for (std::size_t i = 0; i < 900; ++i) {
      REQUIRE(loaded->is_frequent(line_of(i)) == s->is_frequent(line_of(i)));
    }
    std::ostringstream again;
    loaded->save(again);
    CHECK(again.str() == buf.str());
  }
}

TEST_CASE("load_store rejects bad input") {
  std::istringstream empty("");
  CHECK_THROWS_AS(load_store(empty), ConfigError);
  std::istringstream wrong("something else\n");
  CHECK_THROWS_AS(load_store(wrong), ConfigError);
}

TEST_CASE("frequent-line lists") {
  const std::vector<FrequentLine> lines = {{12, "alpha line"}, {10, "beta\twith tab"}, {300, "gamma"}};
  std::stringstream buf;
  write_frequent_lines(buf, lines);
  CHECK(buf.str() == "12\talpha line\n10\tbeta\twith tab\n300\tgamma\n");
  CHECK(read_frequent_lines(buf) == lines);

  FrequentSetStore set(10, lines);
  CHECK(set.sealed());
  CHECK(set.is_frequent("gamma"));
  CHECK_FALSE(set.is_frequent("delta"));
  CHECK_THROWS_AS(set.record("x"), UsageError);
}

TEST_CASE("backend names and factory validation") {
  CHECK(parse_backend("exact") == Backend::exact);
  CHECK(parse_backend("kbit") == Backend::kbit);
  CHECK(parse_backend("frequent-set") == Backend::frequent_set);
  CHECK_FALSE(parse_backend("bogus"));
  CHECK(to_string(Backend::gm) == "gm");
  auto cfg = config(Backend::gm);
  cfg.gm.counters = 0;
  CHECK_THROWS_AS(make_store(cfg), ConfigError);
}

TEST_CASE("query adaptor") {
  ExactStore s(2);
  s.record("aa");
  s.record("aa");
  s.seal();
  const auto q = query_of(s);
  CHECK(q("aa"));
  CHECK_FALSE(q("bb"));
}
