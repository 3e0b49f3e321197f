#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ipd/error.hpp"

namespace ipd {

// Calls fn(line_number, fields) for every non-blank line that does not start with '#'.
// Fields are whitespace separated.
template <typename Fn>
void for_each_record_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::vector<std::string_view> fields;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    fields.clear();
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) fields.push_back(line.substr(i, j - i));
      i = j;
    }
    if (fields.empty() || fields.front().front() == '#') continue;
    fn(line_no, fields);
  }
}

template <typename T = int>
T parse_int_field(std::size_t line, std::string_view field) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw MalformedLine(line, "not an integer: \"" + std::string(field) + "\"");
  return value;
}

}  // namespace ipd
