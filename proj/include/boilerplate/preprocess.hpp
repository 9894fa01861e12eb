#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boilerplate {

inline constexpr std::size_t kMinLineLength = 30;
inline constexpr std::size_t kDefaultWindow = 300;

struct RawLine {
  std::string text;
  std::size_t index = 0;

  friend bool operator==(const RawLine&, const RawLine&) = default;
};

struct NormalizedLine {
  std::string text;
  std::size_t raw_index = 0;

  friend bool operator==(const NormalizedLine&, const NormalizedLine&) = default;
};

/// Canonical spelling of a line: every whitespace run becomes one space, every
/// run of two or more '*' becomes "***" and of two or more '-' becomes "---",
/// then leading and trailing whitespace is removed.
///
/// Bytes are treated as Latin-1, so any input is accepted.
std::string canonicalize(std::string_view text);

/// True when canonical text is shorter than `min_len` or has no ASCII letter.
bool is_trivial(std::string_view canonical, std::size_t min_len = kMinLineLength);

/// Canonicalizes `raw` and returns nullopt for trivial lines.
std::optional<NormalizedLine> normalize_line(const RawLine& raw,
                                             std::size_t min_len = kMinLineLength);

/// Splits on LF. A trailing CR on each line is dropped, and a final newline
/// does not produce an empty last line.
std::vector<RawLine> split_lines(std::string_view bytes);

struct Window {
  std::vector<NormalizedLine> top;
  std::vector<NormalizedLine> bottom;
};

/// First `p_max` and last `e_max` non-trivial lines of a file, both in file
/// order. Short files put the same lines in both halves.
Window extract_window(std::span<const RawLine> lines, std::size_t p_max = kDefaultWindow,
                      std::size_t e_max = kDefaultWindow,
                      std::size_t min_len = kMinLineLength);

/// Lines of `window` with each raw index appearing once, in file order. This is
/// what pass 1 records for a file.
std::vector<NormalizedLine> window_lines(const Window& window);

}  // namespace boilerplate
