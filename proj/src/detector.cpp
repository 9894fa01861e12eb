#include "boilerplate/detector.hpp"

#include <algorithm>
#include <regex>
#include <string_view>

#include "boilerplate/errors.hpp"

namespace boilerplate {

namespace {

const std::regex& preamble_pattern() {
  static const std::regex re(
      R"([\s*]*\*\s*(START\s+OF\s+(THE|THIS)\s+PROJECT\s+GUTENBERG|END[\s*]+THE\s+SMALL\s+PRINT!).*)",
      std::regex::optimize);
  return re;
}

const std::regex& epilogue_pattern() {
  static const std::regex re(
      R"((This|THIS|this|Is|IS|is|The|THE|the|Of|OF|of|[*\s])*(End|END|end))"
      R"((\s|Of|OF|of|The|THE|the|This|THIS|this)*(Project\s+Gutenberg|PROJECT\s+GUTENBERG).*)",
      std::regex::optimize);
  return re;
}

bool contains(std::string_view text, std::string_view needle) {
  return text.find(needle) != std::string_view::npos;
}

}  // namespace

void DetectorConfig::validate() const {
  if (gap_max < 1) throw ConfigError("gap_max must be at least 1");
  if (p_max < 1 || e_max < 1) throw ConfigError("p_max and e_max must be at least 1");
}

std::optional<std::size_t> find_preamble_end(std::span<const NormalizedLine> top,
                                             const FrequencyQuery& is_frequent,
                                             const DetectorConfig& config) {
  std::size_t i = 0;
  while (i < top.size() && !is_frequent(top[i].text)) ++i;
  if (i == top.size()) return std::nullopt;

  std::size_t last = i;
  std::size_t gap = 0;
  for (++i; i < top.size() && gap < config.gap_max; ++i) {
    if (is_frequent(top[i].text)) {
      last = i;
      gap = 0;
    } else {
      ++gap;
    }
  }
  return top[last].raw_index;
}

std::optional<std::size_t> find_epilogue_start(std::span<const NormalizedLine> bottom,
                                               const FrequencyQuery& is_frequent,
                                               const DetectorConfig& config) {
  std::size_t i = bottom.size();
  while (i > 0 && !is_frequent(bottom[i - 1].text)) --i;
  if (i == 0) return std::nullopt;

  std::size_t last = i - 1;
  std::size_t gap = 0;
  for (--i; i > 0 && gap < config.gap_max; --i) {
    if (is_frequent(bottom[i - 1].text)) {
      last = i - 1;
      gap = 0;
    } else {
      ++gap;
    }
  }
  return bottom[last].raw_index;
}

Marker match_heuristic(const RawLine& line, Zone zone) {
  const std::string_view text = line.text;
  if (zone == Zone::near_start) {
    // Cheap prefilter; std::regex is slow.
    if ((contains(text, "GUTENBERG") || contains(text, "SMALL PRINT")) &&
        std::regex_match(line.text, preamble_pattern())) {
      return Marker::preamble;
    }
    return Marker::none;
  }
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text.substr(first).starts_with("ETEXT")) {
    return Marker::epilogue;
  }
  if ((contains(text, "Gutenberg") || contains(text, "GUTENBERG")) &&
      std::regex_match(line.text, epilogue_pattern())) {
    return Marker::epilogue;
  }
  return Marker::none;
}

BoundaryReport detect(std::span<const RawLine> lines, const FrequencyQuery& is_frequent,
                      const DetectorConfig& config, std::string file) {
  config.validate();
  BoundaryReport report{std::move(file), std::nullopt, std::nullopt};
  if (lines.empty()) return report;

  const Window window = extract_window(lines, config.p_max, config.e_max, config.min_line_length);
  report.preamble_end = find_preamble_end(window.top, is_frequent, config);
  report.epilogue_start = find_epilogue_start(window.bottom, is_frequent, config);

  if (config.heuristics) {
    const std::size_t n = lines.size();
    const std::size_t start_zone = std::min(config.p_max, n);
    for (std::size_t i = start_zone; i-- > 0;) {
      if (match_heuristic(lines[i], Zone::near_start) == Marker::preamble) {
        report.preamble_end = std::max(report.preamble_end.value_or(0), i);
        break;
      }
    }
    const std::size_t end_zone = n - std::min(config.e_max, n);
    for (std::size_t i = end_zone; i < n; ++i) {
      if (match_heuristic(lines[i], Zone::near_end) == Marker::epilogue) {
        report.epilogue_start = std::min(report.epilogue_start.value_or(n), i);
        break;
      }
    }
  }

  if (report.preamble_end && report.epilogue_start &&
      *report.preamble_end >= *report.epilogue_start) {
    report.epilogue_start.reset();
  }
  return report;
}

std::vector<RawLine> strip(std::span<const RawLine> lines, const BoundaryReport& report) {
  const std::size_t begin = report.preamble_end ? *report.preamble_end + 1 : 0;
  const std::size_t end = std::min(report.epilogue_start.value_or(lines.size()), lines.size());
  if (begin >= end) return {};
  return {lines.begin() + static_cast<std::ptrdiff_t>(begin),
          lines.begin() + static_cast<std::ptrdiff_t>(end)};
}

}  // namespace boilerplate
