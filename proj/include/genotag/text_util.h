#ifndef GENOTAG_TEXT_UTIL_H_
#define GENOTAG_TEXT_UTIL_H_

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace genotag {

// Opens a file for reading or throws IoError naming the path.
std::ifstream open_input(const std::filesystem::path &path);
std::ofstream open_output(const std::filesystem::path &path);

std::string read_file(const std::filesystem::path &path);

std::string_view trim(std::string_view s);

// Splits on a single character; empty fields are kept.
std::vector<std::string_view> split(std::string_view s, char sep);

// Splits on runs of ASCII whitespace; empty fields are dropped.
std::vector<std::string_view> split_ws(std::string_view s);

// Strips a trailing '\r' left by CRLF files.
void chomp(std::string &line);

// True for lines that are blank or start with '#' after leading blanks.
bool is_comment_or_blank(std::string_view line);

// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

// Fixed-point text with `decimals` digits after the point.
std::string format_fixed(double value, int decimals);

}  // namespace genotag

#endif  // GENOTAG_TEXT_UTIL_H_
