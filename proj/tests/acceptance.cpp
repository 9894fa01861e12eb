// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boilerplate/analysis.hpp"
#include "boilerplate/corpus.hpp"
#include "boilerplate/crc64.hpp"
#include "boilerplate/evaluation.hpp"
#include "boilerplate/external_sort.hpp"
#include "boilerplate/generalized_majority.hpp"
#include "boilerplate/pipeline.hpp"
#include "boilerplate/synthetic.hpp"
#include "cli.hpp"
#include "crc_oracle.hpp"
#include "markov_oracle.hpp"
#include "support.hpp"

using namespace boilerplate;
using namespace boilerplate::analysis;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed conditions; the first few go into the detail line.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) fail_text_ += (fail_text_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : " ") + text; }
  Outcome outcome() const {
    std::string d = notes_;
    if (failures_ > 0) d += (d.empty() ? "" : " | ") + std::to_string(failures_) + " failed: " + fail_text_;
    return {failures_ == 0, d};
  }

 private:
  int failures_ = 0;
  std::string fail_text_;
  std::string notes_;
};

std::string num(double v, int precision = 6) {
  std::ostringstream s;
  s.precision(precision);
  s << v;
  return s.str();
}

// ---------------------------------------------------------------------------

Outcome ac1() {
  Checks c;
  const double v = expected_run_time({0.25, 10});
  c.expect(v == 1398100.0, "expected_run_time(0.25, 10) = " + num(v, 12));
  double worst = 0.0;
  for (int pi = 1; pi <= 9; ++pi) {
    for (int n = 1; n <= 12; ++n) {
      const double oracle = test::markov_expected_time(pi, n);
      const double value = expected_run_time({pi / 10.0, static_cast<std::size_t>(n)});
      worst = std::max(worst, std::abs(value - oracle) / oracle);
    }
  }
  c.expect(worst <= 1e-9, "Markov oracle relative error " + num(worst));
  c.note("value=" + num(v, 12) + " max_rel_err=" + num(worst, 3));
  return c.outcome();
}

Outcome ac2() {
  Checks c;
  const double sim = simulate_run_time({0.5, 2}, 100000, 1);
  const double rel = std::abs(sim - 6.0) / 6.0;
  c.expect(rel <= 0.03, "simulated " + num(sim));
  c.note("simulated=" + num(sim) + " rel_err=" + num(rel, 3));
  return c.outcome();
}

Outcome ac3() {
  Checks c;
  const double v = early_cut_probability(0.25, 300, 10);
  c.expect(std::abs(v - 2.86e-4) / 2.86e-4 <= 0.005, "early cut " + num(v));
  // One significant figure: 3e-4.
  const double exponent = std::floor(std::log10(v));
  const double rounded = std::round(v / std::pow(10.0, exponent)) * std::pow(10.0, exponent);
  c.expect(std::abs(rounded - 3e-4) <= 1e-12, "rounded to one figure " + num(rounded));
  c.note("early_cut=" + num(v, 4));
  return c.outcome();
}

Outcome ac4() {
  Checks c;
  const double v = expected_overshoot(0.2, 10);
  c.expect(v >= 31.5 && v <= 31.6, "overshoot " + num(v));
  for (int g = 1; g <= 20; ++g) {
    double prev = -1.0;
    for (int pi = 0; pi <= 50; ++pi) {
      const double cur = expected_overshoot(pi / 100.0, static_cast<std::size_t>(g));
      c.expect(cur >= prev, "not monotone in p at gap_max=" + std::to_string(g));
      if (g > 1) {
        c.expect(cur >= expected_overshoot(pi / 100.0, static_cast<std::size_t>(g - 1)),
                 "not monotone in gap_max at p=" + num(pi / 100.0));
      }
      prev = cur;
    }
  }
  c.note("overshoot=" + num(v));
  return c.outcome();
}

Outcome ac5() {
  Checks c;
  std::mt19937_64 rng(5);
  const std::size_t budgets[] = {1, 5, 30};
  std::size_t violations = 0, checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t counters = budgets[trial % 3];
    const std::size_t length = 1 + rng() % 10000;
    const std::uint64_t alphabet = 1 + rng() % 500;
    const bool skewed = rng() % 2;
    std::vector<std::uint32_t> stream(length);
    for (auto& x : stream) {
      if (skewed) {
        // Heavy-headed: item id is the min of two draws.
        x = static_cast<std::uint32_t>(std::min(rng() % alphabet, rng() % alphabet));
      } else {
        x = static_cast<std::uint32_t>(rng() % alphabet);
      }
    }
    GeneralizedMajority<std::uint32_t> gm(counters);
    std::map<std::uint32_t, std::uint64_t> freq;
    for (auto x : stream) {
      gm.offer(x);
      ++freq[x];
    }
    for (const auto& [item, f] : freq) {
      // f >= n/(c+1), in integers.
      if (f * (counters + 1) >= length) {
        ++checked;
        if (!gm.monitors(item)) ++violations;
      }
    }
  }
  c.expect(violations == 0, std::to_string(violations) + " frequent items unmonitored");
  c.note("streams=1000 frequent_items=" + std::to_string(checked) + " violations=" + std::to_string(violations));
  return c.outcome();
}

Outcome ac6() {
  Checks c;
  ZipfExperiment high;
  high.exponent = 3.0;
  ZipfExperiment flat;
  flat.exponent = 0.0;
  const double e3 = zipf_gm_efficiency(high);
  const double e0 = zipf_gm_efficiency(flat);
  c.expect(e3 >= 0.90, "x=3 efficiency " + num(e3, 4) + " < 0.90");
  c.expect(e0 <= 0.20, "x=0 efficiency " + num(e0, 4) + " > 0.20");
  c.note("x3=" + num(e3, 4) + " x0=" + num(e0, 4));
  return c.outcome();
}

Outcome ac7() {
  Checks c;
  test::TempDir dir("accept-spool");
  const auto spool = dir / "spool.txt";

  // Heavy-tailed line counts expanded to exactly 10^6 shuffled lines.
  const auto counts = synthetic_line_counts(600000, 7);
  std::vector<std::uint32_t> ids;
  for (std::size_t i = 0; i < counts.size(); ++i) ids.insert(ids.end(), counts[i], static_cast<std::uint32_t>(i));
  std::mt19937_64 rng(7);
  std::shuffle(ids.begin(), ids.end(), rng);
  if (ids.size() < 1000000) {
    c.expect(false, "spool generator produced only " + std::to_string(ids.size()) + " lines");
    return c.outcome();
  }
  ids.resize(1000000);
  {
    std::ofstream out(spool, std::ios::binary);
    for (auto id : ids) out << "window line " << id << " of the synthetic spool text\n";
  }

  StoreConfig config;
  config.threshold = 10;
  const auto exact_store = build_index_from_spool(spool, config);
  const auto& exact = dynamic_cast<const ExactStore&>(*exact_store);
  config.backend = Backend::crc64;
  const auto crc = build_index_from_spool(spool, config);
  config.backend = Backend::kbit;
  const auto kbit = build_index_from_spool(spool, config);
  ExternalSortOptions sort;
  sort.threshold = 10;
  sort.memory_budget = std::size_t{4} << 20;
  sort.temp_dir = dir.path();
  const auto sorted = external_sort_count(spool, sort);

  const auto reference = exact.frequent_lines();
  c.expect(sorted == reference, "external sort differs from exact");

  std::size_t crc_diff = 0, missed = 0, false_pos = 0, infrequent = 0;
  for (const auto& [line, n] : exact.counts()) {
    const bool truth = n >= 10;
    if (crc->is_frequent(line) != truth) ++crc_diff;
    const bool k = kbit->is_frequent(line);
    if (truth && !k) ++missed;
    if (!truth) {
      ++infrequent;
      if (k) ++false_pos;
    }
  }
  const std::uint64_t distinct = exact.counts().size();
  const std::uint64_t slots = std::uint64_t{1} << config.kbit.hash_bits;
  const double fp = infrequent ? static_cast<double>(false_pos) / static_cast<double>(infrequent) : 0.0;
  const double bound = fp_bound_crude({distinct, slots});
  c.expect(crc_diff == 0, std::to_string(crc_diff) + " crc64 disagreements");
  c.expect(missed == 0, std::to_string(missed) + " frequent lines missed by kbit");
  c.expect(fp <= bound, "kbit fp fraction " + num(fp) + " above bound " + num(bound));
  c.note("distinct=" + std::to_string(distinct) + " frequent=" + std::to_string(reference.size()) +
         " kbit_fp=" + num(fp, 3) + " bound=" + num(bound, 3));
  return c.outcome();
}

Outcome ac8() {
  Checks c;
  const double crude = fp_bound_crude({3400001, std::uint64_t{1} << 23});
  const double skewed = fp_bound_skewed({3400001, std::uint64_t{1} << 23, 1e-3});
  const double single = shared_counter_probability(3000, std::uint64_t{1} << 23);
  c.expect(std::abs(crude - 0.333) <= 0.001, "crude " + num(crude));
  c.expect(std::abs(skewed - 4.05e-4) / 4.05e-4 <= 0.01, "skewed " + num(skewed));
  c.expect(single == 3000.0 / 8388608.0, "single collision " + num(single));
  c.expect(std::abs(single - 3.6e-4) < 0.05e-4, "single collision rounds to " + num(single, 2));
  c.note("crude=" + num(crude, 5) + " skewed=" + num(skewed, 4) + " single=" + num(single, 3));
  return c.outcome();
}

Outcome ac9() {
  Checks c;
  test::TempDir dir("accept-e2e");
  SyntheticSpec spec;
  spec.files = 500;
  spec.mutation_rate = 0.25;
  spec.seed = 2009;
  const auto corpus = generate_synthetic(spec);
  write_synthetic(corpus, dir.path());

  std::map<std::size_t, std::size_t> copies;
  for (const auto& f : corpus.files) ++copies[f.preamble_variant];
  std::size_t fewest = corpus.files.size();
  for (const auto& [variant, n] : copies) fewest = std::min(fewest, n);
  c.expect(copies.size() == spec.preambles.size() && fewest >= 20,
           "only " + std::to_string(fewest) + " copies of a variant");

  const auto manifest = ingest(dir.path());
  DetectorConfig det;
  det.gap_max = 10;
  StoreConfig store;
  store.threshold = 10;
  const auto index = build_index(manifest, store, det, 4);
  const auto on = evaluate(detect_corpus(manifest, *index, det, 4), corpus.gold);
  det.heuristics = false;
  const auto off = evaluate(detect_corpus(manifest, *index, det, 4), corpus.gold);

  const double pre = on.fraction_within(Side::preamble, 10);
  const double epi = on.fraction_within(Side::epilogue, 10);
  c.expect(pre >= 0.95, "preamble within 10: " + num(pre, 4));
  c.expect(epi >= 0.95, "epilogue within 10: " + num(epi, 4));
  for (Side side : {Side::preamble, Side::epilogue}) {
    const auto a = on.sorted_magnitudes(side);
    const auto b = off.sorted_magnitudes(side);
    bool never_worse = a.size() == b.size();
    for (std::size_t i = 0; never_worse && i < a.size(); ++i) never_worse = a[i] <= b[i];
    c.expect(never_worse, std::string(side == Side::preamble ? "preamble" : "epilogue") +
                              " curve worse with heuristics");
  }
  c.note("copies_min=" + std::to_string(fewest) + " pre10=" + num(pre, 4) + " epi10=" + num(epi, 4) +
         " off_pre10=" + num(off.fraction_within(Side::preamble, 10), 4) +
         " off_epi10=" + num(off.fraction_within(Side::epilogue, 10), 4));
  return c.outcome();
}

struct CliRun {
  int code = 0;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

std::map<std::string, std::string> tree(const std::filesystem::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) files[std::filesystem::relative(e.path(), root).string()] = test::slurp(e.path());
  }
  return files;
}

Outcome ac10() {
  Checks c;
  test::TempDir dir("accept-det");
  const auto a = dir / "a";
  const auto b = dir / "b";
  for (const auto& target : {a, b}) {
    c.expect(cli({"generate", "--out", target.string(), "--files", "60", "--mutation", "0.25", "--seed", "3",
                  "--body-min", "100", "--body-max", "300"})
                     .code == 0,
             "generate failed");
  }
  c.expect(tree(a) == tree(b), "generate output differs");
  const std::string corpus = a.string();

  std::size_t compared = 0;
  // Same command twice, then again with 8 workers where a worker option exists.
  auto same = [&](const std::string& name, std::vector<std::string> args, bool workers) {
    const auto first = cli(args);
    const auto second = cli(args);
    c.expect(first.code == 0, name + " failed");
    c.expect(first.out == second.out, name + " differs between runs");
    ++compared;
    if (!workers) return;
    auto one = args;
    one.insert(one.end(), {"--workers", "1"});
    auto eight = args;
    eight.insert(eight.end(), {"--workers", "8"});
    c.expect(cli(one).out == cli(eight).out, name + " differs between 1 and 8 workers");
    ++compared;
  };
  for (const char* backend : {"exact", "crc64", "kbit", "external"}) {
    same(std::string("strip ") + backend, {"strip", "--corpus", corpus, "--backend", backend}, true);
  }
  same("strip kbit morris", {"strip", "--corpus", corpus, "--backend", "kbit", "--morris"}, false);
  same("strip gm", {"strip", "--corpus", corpus, "--backend", "gm"}, false);
  same("index kbit", {"index", "--corpus", corpus, "--backend", "kbit", "--k-bits", "16", "--out", "-"}, true);
  same("index frequent", {"index", "--corpus", corpus, "--frequent-out", "-"}, true);
  same("prop1", {"analyze", "prop1", "--p", "0.3,0.5", "--n", "2,4", "--trials", "20000", "--seed", "9"}, false);
  same("overshoot", {"analyze", "overshoot", "--p", "0.1,0.2", "--gap-max", "5,10"}, false);
  same("fp-bounds", {"analyze", "fp-bounds", "--n", "200000", "--c", "65536", "--seed", "4"}, false);
  same("histogram", {"analyze", "histogram", "--corpus", corpus}, true);
  same("zipf-gm", {"analyze", "zipf-gm", "--x", "0,1,3", "--trials", "3", "--seed", "7"}, true);

  const auto report = (dir / "report.tsv").string();
  cli({"strip", "--corpus", corpus, "--report", report});
  same("evaluate", {"evaluate", "--reports", report, "--gold", (a / "gold.tsv").string(), "--summary", "-",
                    "--curves", "-"},
       false);

  // Stripped bodies.
  const auto b1 = dir / "bodies1";
  const auto b8 = dir / "bodies8";
  cli({"strip", "--corpus", corpus, "--report", (dir / "r1").string(), "--write-bodies", b1.string(), "--workers", "1"});
  cli({"strip", "--corpus", corpus, "--report", (dir / "r8").string(), "--write-bodies", b8.string(), "--workers", "8"});
  c.expect(tree(b1) == tree(b8) && !tree(b1).empty(), "stripped bodies differ between worker counts");
  ++compared;

  c.note("comparisons=" + std::to_string(compared));
  return c.outcome();
}

Outcome ac11() {
  Checks c;
  const auto check = crc64("123456789");
  c.expect(test::crc64_bitwise("123456789") == 0x6C40DF5F0B497347ULL, "bitwise oracle check value");
  c.expect(check == test::crc64_bitwise("123456789"), "table-driven check value");
  std::mt19937_64 rng(11);
  std::size_t disagreements = 0;
  for (int i = 0; i < 10000; ++i) {
    std::string s(rng() % 300, '\0');
    for (auto& ch : s) ch = static_cast<char>(rng());
    if (crc64(s) != test::crc64_bitwise(s)) ++disagreements;
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " random strings disagree");
  char hex[32];
  std::snprintf(hex, sizeof hex, "0x%016llX", static_cast<unsigned long long>(check));
  c.note(std::string("check=") + hex);
  return c.outcome();
}

struct Criterion {
  const char* id;
  const char* name;
  double max_seconds;  // 0: no runtime limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "run-time closed form and Markov oracle", 1.0, ac1},
      {"AC2", "Monte-Carlo run time", 5.0, ac2},
      {"AC3", "early-cut bound", 0.0, ac3},
      {"AC4", "overshoot value and monotonicity", 0.0, ac4},
      {"AC5", "GM frequency guarantee", 30.0, ac5},
      {"AC6", "GM efficiency under skew", 60.0, ac6},
      {"AC7", "backend equivalence on a 10^6-line spool", 120.0, ac7},
      {"AC8", "false-positive bounds", 0.0, ac8},
      {"AC9", "end-to-end detection accuracy", 60.0, ac9},
      {"AC10", "determinism", 0.0, ac10},
      {"AC11", "CRC-64 bit exactness", 0.0, ac11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.max_seconds > 0 && secs > c.max_seconds) {
      o.pass = false;
      o.detail += " | runtime " + num(secs, 3) + "s over " + num(c.max_seconds, 3) + "s";
    }
    if (!o.pass) ++failed;
    std::printf("%s %s %s (%s) [%.2fs]\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
