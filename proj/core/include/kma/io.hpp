#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kma {

/// Shortest round-trip decimal form.
std::string format_number(double x);
/// Fixed-point form used for figure coordinates.
std::string format_fixed(double x, int digits = 4);

/// RFC-4180 field quoting.
std::string csv_field(std::string_view s);
/// One CSV record terminated by CRLF.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace kma
