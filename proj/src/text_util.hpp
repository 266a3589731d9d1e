#pragma once

// Internal string helpers shared by the implementation files.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nerh::detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r' || c == '\n';
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline bool contains_whitespace(std::string_view s) {
  for (char c : s)
    if (is_space(c)) return true;
  return false;
}

inline std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

/// Splits on runs of blanks (space/tab/vtab/formfeed); never yields empty fields.
std::vector<std::string_view> split_whitespace(std::string_view line);

/// Splits on every occurrence of sep; empty fields are preserved.
std::vector<std::string_view> split_char(std::string_view line, char sep);

/// Iterates lines of a text blob; a trailing newline terminates the last line
/// instead of opening an empty one.
std::vector<std::string_view> split_lines(std::string_view text);

bool valid_utf8(std::string_view s);

std::uint64_t fnv1a64(std::string_view s);

/// 609922 -> "609,922".
std::string with_thousands(std::size_t value);

/// Fixed-point rendering with the given number of decimals, half-up.
std::string format_fixed(double value, int decimals);

}  // namespace nerh::detail
