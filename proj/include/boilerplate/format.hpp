#pragma once

#include <string>
#include <string_view>

namespace boilerplate {

/// Shortest round-trip decimal form, independent of the C locale.
std::string format_number(double value);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

}  // namespace boilerplate
