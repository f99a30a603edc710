#include "kma/io.hpp"

#include <fmt/format.h>

namespace kma {

std::string format_number(double x) {
  if (x == 0) return "0";
  return fmt::format("{}", x);
}

std::string format_fixed(double x, int digits) {
  std::string s = fmt::format("{:.{}f}", x, digits);
  if (s.find_first_not_of("-0.") == std::string::npos) return "0";
  return s;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += csv_field(fields[i]);
  }
  out += "\r\n";
  return out;
}

}  // namespace kma
