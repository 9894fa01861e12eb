#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "boilerplate/frequency_store.hpp"

namespace boilerplate {

inline constexpr std::size_t kMinSortBudget = 64 * 1024;

struct ExternalSortOptions {
  std::uint64_t threshold = kDefaultThreshold;
  std::size_t memory_budget = std::size_t{512} << 20;  // bytes of lines held per run
  std::filesystem::path temp_dir;                      // empty: system temp directory
  std::size_t max_fan_in = 64;                         // open run files per merge
};

/// Frequent lines of a spool file (one line per record) by external merge
/// sort: sorted, run-length aggregated runs that fit the memory budget are
/// merged in at most `max_fan_in`-way steps, then counts >= K are kept.
/// Output is sorted by line bytes.
std::vector<FrequentLine> external_sort_count(const std::filesystem::path& spool,
                                              const ExternalSortOptions& options = {});

}  // namespace boilerplate
