#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boilerplate/frequency_store.hpp"
#include "boilerplate/preprocess.hpp"

namespace boilerplate {

struct DetectorConfig {
  std::size_t gap_max = 10;
  std::size_t p_max = kDefaultWindow;
  std::size_t e_max = kDefaultWindow;
  std::size_t min_line_length = kMinLineLength;
  bool heuristics = true;

  void validate() const;
};

/// Detected boundaries as raw line indices. `preamble_end` is the last
/// preamble line and `epilogue_start` the first epilogue line; both inclusive.
struct BoundaryReport {
  std::string file;
  std::optional<std::size_t> preamble_end;
  std::optional<std::size_t> epilogue_start;

  friend bool operator==(const BoundaryReport&, const BoundaryReport&) = default;
};

/// Skips infrequent lines up to the first frequent one, then follows frequent
/// lines until `gap_max` consecutive infrequent lines (or the window end).
/// Returns the raw index of the last frequent line seen.
std::optional<std::size_t> find_preamble_end(std::span<const NormalizedLine> top,
                                             const FrequencyQuery& is_frequent,
                                             const DetectorConfig& config);

/// Mirror image of find_preamble_end, scanning `bottom` from the end.
std::optional<std::size_t> find_epilogue_start(std::span<const NormalizedLine> bottom,
                                               const FrequencyQuery& is_frequent,
                                               const DetectorConfig& config);

enum class Zone { near_start, near_end };
enum class Marker { none, preamble, epilogue };

/// Regular-expression overrides: START OF THE PROJECT GUTENBERG / END THE
/// SMALL PRINT near the start mark the preamble; "End ... Project Gutenberg"
/// or a leading ETEXT near the end mark the epilogue.
Marker match_heuristic(const RawLine& line, Zone zone);

/// Frequency boundaries, optionally widened by heuristic markers; when the
/// two boundaries cross the epilogue is dropped.
BoundaryReport detect(std::span<const RawLine> lines, const FrequencyQuery& is_frequent,
                      const DetectorConfig& config, std::string file = {});

/// Body lines strictly between the two boundaries.
std::vector<RawLine> strip(std::span<const RawLine> lines, const BoundaryReport& report);

}  // namespace boilerplate
