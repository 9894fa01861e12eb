#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "boilerplate/detector.hpp"

namespace boilerplate {

// Boundary TSV: `file<TAB>preamble_end<TAB>epilogue_start`, '-' for absent.
// Lines starting with '#' are comments.

std::string format_report(const BoundaryReport& report);
void write_reports(std::ostream& out, std::span<const BoundaryReport> reports);
std::vector<BoundaryReport> read_reports(std::istream& in);

}  // namespace boilerplate
