#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "boilerplate/frequency_store.hpp"

namespace boilerplate::analysis {

/// Coin model: each flip is a head with probability `p`; we wait for `n`
/// consecutive heads.
struct RunModel {
  double p = 0.5;
  std::size_t n = 1;

  void validate() const;
};

/// Expected flips until `n` consecutive heads: sum over i = 1..n of p^-i.
double expected_run_time(const RunModel& model);

/// Monte-Carlo estimate of expected_run_time over `trials` seeded runs.
double simulate_run_time(const RunModel& model, std::size_t trials, std::uint64_t seed);

/// Expected body lines absorbed into the preamble when each body line is a
/// false positive independently with probability `p_fp`:
/// sum over k = 1..gap_max of (1 - p_fp)^-k, minus gap_max.
double expected_overshoot(double p_fp, std::size_t gap_max);

/// Union bound L * sigma^gap_max on cutting a preamble of L lines short when
/// each of its lines is a false negative with probability sigma.
double early_cut_probability(double sigma, std::size_t length, std::size_t gap_max);

struct FpBoundInput {
  std::uint64_t n_distinct = 1;
  std::uint64_t counters = 1;
  double p_skew = 0.0;
  std::uint64_t threshold = kDefaultThreshold;

  void validate() const;
};

/// P(a line shares its counter with another) = 1 - exp(-(n-1)/c).
double fp_bound_crude(const FpBoundInput& in);

/// Bound p (n-1)/c for heavily skewed count distributions.
double fp_bound_skewed(const FpBoundInput& in);

/// Chance that a given infrequent line lands on one of `n_frequent` counters
/// among `counters`: n_frequent / counters.
double shared_counter_probability(std::uint64_t n_frequent, std::uint64_t counters);

struct OccurrenceHistogram {
  /// occurrence count -> number of distinct lines with that count
  std::map<std::uint64_t, std::uint64_t> distinct_by_count;
  /// (k, P(X >= k)) for each k present in the histogram, ascending k
  std::vector<std::pair<std::uint64_t, double>> tail;
  std::uint64_t total_occurrences = 0;
  std::uint64_t distinct_lines = 0;
};

enum class TailWeighting { by_occurrence, by_distinct };

/// Histogram of per-line counts. With by_occurrence, P(X >= k) is the chance
/// that a line occurrence drawn uniformly belongs to a line seen at least k
/// times; by_distinct draws distinct lines instead.
OccurrenceHistogram occurrence_histogram(std::span<const std::uint64_t> counts,
                                         TailWeighting weighting = TailWeighting::by_occurrence);
OccurrenceHistogram occurrence_histogram(const ExactStore& store,
                                         TailWeighting weighting = TailWeighting::by_occurrence);

/// Hash-collision experiment behind the counter-array bounds: each distinct
/// line (with the given count) is hashed uniformly into `counters` slots and
/// a line with count < K is a false positive when its slot totals >= K.
/// Returns false-positive assessments over all assessments (one per occurrence).
double empirical_fp_rate(std::span<const std::uint64_t> counts, std::uint64_t counters,
                         std::uint64_t threshold, std::uint64_t seed);

/// Seeded heavy-tailed count sample, P(count = m) proportional to m^-alpha on
/// [1, max_count]; mimics window-line statistics where most lines are unique.
std::vector<std::uint64_t> synthetic_line_counts(std::size_t n_distinct, std::uint64_t seed,
                                                 double alpha = 2.6,
                                                 std::uint64_t max_count = 10000);

struct ZipfExperiment {
  double exponent = 1.0;
  std::size_t n_items = 100000;
  std::size_t n_distinct = 1000;
  std::size_t counters = 30;
  std::size_t trials = 30;
  std::uint64_t seed = 0;

  void validate() const;
};

/// One trial: the largest k <= counters for which the true top-k set is
/// unambiguous (the k-th and (k+1)-th true frequencies differ) and equals the
/// set of GM's k largest counters; returned as k / counters.
double gm_efficiency(std::span<const std::uint32_t> stream, std::size_t n_distinct,
                     std::size_t counters);

/// Rank r (1-based) appears round(n_items * w_r) times, w_r proportional to
/// r^-exponent, in a seeded random order. Item ids are rank - 1.
std::vector<std::uint32_t> zipf_stream(double exponent, std::size_t n_items,
                                       std::size_t n_distinct, std::uint64_t seed);

/// Mean gm_efficiency over `trials` streams seeded seed, seed+1, ...
double zipf_gm_efficiency(const ZipfExperiment& experiment);

}  // namespace boilerplate::analysis
