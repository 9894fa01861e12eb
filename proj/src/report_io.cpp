#include "boilerplate/report_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "boilerplate/errors.hpp"

namespace boilerplate {

namespace {

std::string field(const std::optional<std::size_t>& value) {
  return value ? std::to_string(*value) : std::string("-");
}

std::optional<std::size_t> parse_field(std::string_view text, std::size_t line_no) {
  if (text == "-") return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("line " + std::to_string(line_no) + ": bad boundary '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string format_report(const BoundaryReport& report) {
  return report.file + '\t' + field(report.preamble_end) + '\t' + field(report.epilogue_start);
}

void write_reports(std::ostream& out, std::span<const BoundaryReport> reports) {
  for (const auto& r : reports) out << format_report(r) << '\n';
}

std::vector<BoundaryReport> read_reports(std::istream& in) {
  std::vector<BoundaryReport> out;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto a = line.rfind('\t');
    const auto b = a == std::string::npos || a == 0 ? std::string::npos : line.rfind('\t', a - 1);
    if (b == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected three tab-separated fields");
    }
    std::string_view view(line);
    out.push_back({line.substr(0, b), parse_field(view.substr(b + 1, a - b - 1), line_no),
                   parse_field(view.substr(a + 1), line_no)});
  }
  return out;
}

}  // namespace boilerplate
