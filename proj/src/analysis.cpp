#include "boilerplate/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "boilerplate/errors.hpp"
#include "boilerplate/generalized_majority.hpp"
#include "boilerplate/random.hpp"

namespace boilerplate::analysis {

void RunModel::validate() const {
  if (!(p > 0.0) || p > 1.0) throw ConfigError("run model needs 0 < p <= 1");
  if (n < 1) throw ConfigError("run model needs n >= 1");
}

double expected_run_time(const RunModel& model) {
  model.validate();
  // p^-1 <= p^-2 <= ...: ascending i adds the small terms first.
  double sum = 0.0;
  double term = 1.0;
  for (std::size_t i = 1; i <= model.n; ++i) {
    term /= model.p;
    sum += term;
  }
  return sum;
}

double simulate_run_time(const RunModel& model, std::size_t trials, std::uint64_t seed) {
  model.validate();
  if (trials < 1) throw ConfigError("need at least one trial");
  std::mt19937_64 rng(seed);
  double total = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::uint64_t flips = 0;
    std::size_t run = 0;
    while (run < model.n) {
      ++flips;
      run = uniform01(rng) < model.p ? run + 1 : 0;
    }
    total += static_cast<double>(flips);
  }
  return total / static_cast<double>(trials);
}

double expected_overshoot(double p_fp, std::size_t gap_max) {
  if (!(p_fp >= 0.0) || p_fp >= 1.0) throw ConfigError("overshoot needs 0 <= p_fp < 1");
  if (gap_max == 0) return 0.0;
  return expected_run_time({1.0 - p_fp, gap_max}) - static_cast<double>(gap_max);
}

double early_cut_probability(double sigma, std::size_t length, std::size_t gap_max) {
  if (!(sigma >= 0.0) || sigma > 1.0) throw ConfigError("sigma must lie in [0, 1]");
  return static_cast<double>(length) * std::pow(sigma, static_cast<double>(gap_max));
}

void FpBoundInput::validate() const {
  if (n_distinct < 1) throw ConfigError("need at least one distinct line");
  if (counters < 1) throw ConfigError("need at least one counter");
  if (!(p_skew >= 0.0) || p_skew > 1.0) throw ConfigError("skew probability must lie in [0, 1]");
}

double fp_bound_crude(const FpBoundInput& in) {
  in.validate();
  return -std::expm1(-static_cast<double>(in.n_distinct - 1) / static_cast<double>(in.counters));
}

double fp_bound_skewed(const FpBoundInput& in) {
  in.validate();
  return in.p_skew * static_cast<double>(in.n_distinct - 1) / static_cast<double>(in.counters);
}

double shared_counter_probability(std::uint64_t n_frequent, std::uint64_t counters) {
  if (counters < 1) throw ConfigError("need at least one counter");
  return static_cast<double>(n_frequent) / static_cast<double>(counters);
}

OccurrenceHistogram occurrence_histogram(std::span<const std::uint64_t> counts,
                                         TailWeighting weighting) {
  OccurrenceHistogram h;
  for (auto c : counts) {
    if (c == 0) continue;
    ++h.distinct_by_count[c];
    h.total_occurrences += c;
    ++h.distinct_lines;
  }
  if (h.distinct_lines == 0) return h;

  const double total = weighting == TailWeighting::by_occurrence
                           ? static_cast<double>(h.total_occurrences)
                           : static_cast<double>(h.distinct_lines);
  // Accumulate from the top so each tail value is a sum of exact integers.
  std::uint64_t above = 0;
  for (auto it = h.distinct_by_count.rbegin(); it != h.distinct_by_count.rend(); ++it) {
    above += weighting == TailWeighting::by_occurrence ? it->first * it->second : it->second;
    h.tail.emplace_back(it->first, static_cast<double>(above) / total);
  }
  std::reverse(h.tail.begin(), h.tail.end());
  return h;
}

OccurrenceHistogram occurrence_histogram(const ExactStore& store, TailWeighting weighting) {
  std::vector<std::uint64_t> counts;
  counts.reserve(store.counts().size());
  for (const auto& [text, n] : store.counts()) counts.push_back(n);
  return occurrence_histogram(counts, weighting);
}

double empirical_fp_rate(std::span<const std::uint64_t> counts, std::uint64_t counters,
                         std::uint64_t threshold, std::uint64_t seed) {
  if (counters < 1) throw ConfigError("need at least one counter");
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> slot(counts.size());
  std::unordered_map<std::uint64_t, std::uint64_t> load;
  load.reserve(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    slot[i] = uniform_index(rng, counters);
    load[slot[i]] += counts[i];
  }
  std::uint64_t assessments = 0;
  std::uint64_t false_positives = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    assessments += counts[i];
    if (counts[i] < threshold && load[slot[i]] >= threshold) false_positives += counts[i];
  }
  return assessments == 0 ? 0.0
                          : static_cast<double>(false_positives) / static_cast<double>(assessments);
}

std::vector<std::uint64_t> synthetic_line_counts(std::size_t n_distinct, std::uint64_t seed,
                                                 double alpha, std::uint64_t max_count) {
  if (max_count < 1) throw ConfigError("max_count must be at least 1");
  std::vector<double> cdf(max_count);
  double acc = 0.0;
  for (std::uint64_t m = 1; m <= max_count; ++m) {
    acc += std::pow(static_cast<double>(m), -alpha);
    cdf[m - 1] = acc;
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> counts(n_distinct);
  for (auto& c : counts) {
    const double u = uniform01(rng) * acc;
    c = static_cast<std::uint64_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin()) + 1;
    c = std::min(c, max_count);
  }
  return counts;
}

void ZipfExperiment::validate() const {
  if (counters < 1 || counters > n_distinct) throw ConfigError("need 1 <= c <= n_distinct");
  if (n_distinct < 1 || n_items < 1 || trials < 1) throw ConfigError("empty Zipf experiment");
  if (!(exponent >= 0.0)) throw ConfigError("Zipf exponent must be non-negative");
}

std::vector<std::uint32_t> zipf_stream(double exponent, std::size_t n_items,
                                       std::size_t n_distinct, std::uint64_t seed) {
  std::vector<double> weight(n_distinct);
  for (std::size_t r = 1; r <= n_distinct; ++r) {
    weight[r - 1] = std::pow(static_cast<double>(r), -exponent);
  }
  const double total = std::accumulate(weight.begin(), weight.end(), 0.0);
  std::vector<std::uint32_t> stream;
  stream.reserve(n_items + n_distinct);
  for (std::size_t r = 0; r < n_distinct; ++r) {
    const auto quota = static_cast<std::size_t>(
        std::llround(static_cast<double>(n_items) * weight[r] / total));
    stream.insert(stream.end(), quota, static_cast<std::uint32_t>(r));
  }
  std::mt19937_64 rng(seed);
  shuffle(std::span(stream), rng);
  return stream;
}

double gm_efficiency(std::span<const std::uint32_t> stream, std::size_t n_distinct,
                     std::size_t counters) {
  std::vector<std::uint64_t> freq(n_distinct, 0);
  GeneralizedMajority<std::uint32_t> gm(counters);
  for (auto item : stream) {
    ++freq.at(item);
    gm.offer(item);
  }
  std::vector<std::uint64_t> sorted = freq;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  const auto top = gm.monitored();
  std::size_t best = 0;
  for (std::size_t k = 1; k <= std::min(counters, top.size()); ++k) {
    // The true top-k must be unambiguous: no tie across the k-th place.
    if (k < n_distinct && sorted[k - 1] == sorted[k]) continue;
    const std::uint64_t kth = sorted[k - 1];
    bool exact = true;
    for (std::size_t j = 0; j < k && exact; ++j) exact = freq[top[j].first] >= kth;
    if (exact) best = k;
  }
  return static_cast<double>(best) / static_cast<double>(counters);
}

double zipf_gm_efficiency(const ZipfExperiment& experiment) {
  experiment.validate();
  double total = 0.0;
  for (std::size_t t = 0; t < experiment.trials; ++t) {
    const auto stream = zipf_stream(experiment.exponent, experiment.n_items,
                                    experiment.n_distinct, experiment.seed + t);
    total += gm_efficiency(stream, experiment.n_distinct, experiment.counters);
  }
  return total / static_cast<double>(experiment.trials);
}

}  // namespace boilerplate::analysis
