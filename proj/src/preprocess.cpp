#include "boilerplate/preprocess.hpp"

#include <algorithm>

#include "boilerplate/errors.hpp"

namespace boilerplate {

namespace {

constexpr bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r';
}

constexpr bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

}  // namespace

std::string canonicalize(std::string_view text) {
  // Whitespace first.
  std::string spaced;
  spaced.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (is_space(text[i])) {
      while (i < text.size() && is_space(text[i])) ++i;
      spaced.push_back(' ');
    } else {
      spaced.push_back(text[i++]);
    }
  }

  std::string out;
  out.reserve(spaced.size());
  for (std::size_t i = 0; i < spaced.size();) {
    const char c = spaced[i];
    if (c == '*' || c == '-') {
      std::size_t j = i;
      while (j < spaced.size() && spaced[j] == c) ++j;
      if (j - i >= 2) {
        out.append(3, c);
      } else {
        out.push_back(c);
      }
      i = j;
    } else {
      out.push_back(c);
      ++i;
    }
  }

  const auto first = out.find_first_not_of(' ');
  if (first == std::string::npos) return {};
  const auto last = out.find_last_not_of(' ');
  return out.substr(first, last - first + 1);
}

bool is_trivial(std::string_view canonical, std::size_t min_len) {
  return canonical.size() < min_len || std::none_of(canonical.begin(), canonical.end(), is_alpha);
}

std::optional<NormalizedLine> normalize_line(const RawLine& raw, std::size_t min_len) {
  std::string text = canonicalize(raw.text);
  if (is_trivial(text, min_len)) return std::nullopt;
  return NormalizedLine{std::move(text), raw.index};
}

std::vector<RawLine> split_lines(std::string_view bytes) {
  std::vector<RawLine> lines;
  std::size_t start = 0;
  while (start < bytes.size()) {
    auto end = bytes.find('\n', start);
    const bool last = end == std::string_view::npos;
    if (last) end = bytes.size();
    std::string_view line = bytes.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(RawLine{std::string(line), lines.size()});
    start = last ? bytes.size() : end + 1;
  }
  return lines;
}

Window extract_window(std::span<const RawLine> lines, std::size_t p_max, std::size_t e_max,
                      std::size_t min_len) {
  if (p_max == 0 || e_max == 0) throw ConfigError("window sizes must be positive");
  Window window;
  for (const auto& raw : lines) {
    if (window.top.size() >= p_max) break;
    if (auto line = normalize_line(raw, min_len)) window.top.push_back(std::move(*line));
  }
  for (auto it = lines.rbegin(); it != lines.rend() && window.bottom.size() < e_max; ++it) {
    if (auto line = normalize_line(*it, min_len)) window.bottom.push_back(std::move(*line));
  }
  std::reverse(window.bottom.begin(), window.bottom.end());
  return window;
}

std::vector<NormalizedLine> window_lines(const Window& window) {
  std::vector<NormalizedLine> out = window.top;
  const std::size_t after = window.top.empty() ? 0 : window.top.back().raw_index + 1;
  for (const auto& line : window.bottom) {
    if (window.top.empty() || line.raw_index >= after) out.push_back(line);
  }
  return out;
}

}  // namespace boilerplate
