#pragma once

// Small parsing helpers shared by the text formats.

#include "fibcomp/error.hpp"

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fibcomp::text {

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  std::int64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    fail(ErrorCode::parse_error, "expected an integer for " + std::string(what) + ", got '" +
                                     std::string(s) + "'");
  }
  return value;
}

inline std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  const std::int64_t v = parse_int(s, what);
  if (v < 0) {
    fail(ErrorCode::parse_error,
         "expected a nonnegative integer for " + std::string(what) + ", got " + std::to_string(v));
  }
  return static_cast<std::uint64_t>(v);
}

/// True when `s` is an optionally signed run of decimal digits.
inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

template <class Range, class Fn>
std::string join(const Range& items, std::string_view sep, Fn&& to_text) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    first = false;
    out += to_text(item);
  }
  return out;
}

}  // namespace fibcomp::text
