#pragma once

// Line-oriented helpers shared by the plain-text file formats.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bvl::text_util {

std::vector<std::string> lines(std::string_view text);
std::vector<std::string> words(std::string_view line);
/// Drops everything from the first '#'.
std::string_view strip_comment(std::string_view line);
/// Parses a natural number; Error(Parse) naming `line_no` otherwise.
std::size_t to_index(std::string_view word, std::size_t line_no);

}  // namespace bvl::text_util
