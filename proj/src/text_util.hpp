#pragma once

// Tokenising helpers shared by the text-format parsers.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "lettergrid/error.hpp"

namespace lettergrid::detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

inline bool is_separator(char c, bool commas) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || (commas && c == ',');
}

inline std::vector<std::string_view> tokens(std::string_view text, bool commas = false) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i], commas)) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j], commas)) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool blank(std::string_view line) { return tokens(line).empty(); }

inline int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(std::string(what) + ": expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace lettergrid::detail
