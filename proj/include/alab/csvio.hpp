#pragma once

#include <string>
#include <vector>

namespace alab {

// Shortest round-trip decimal representation (to_chars), so CSV and SVG
// output is byte-stable across runs and re-parses to the identical double.
std::string format_double(double v);
double parse_double(const std::string& text);
long parse_long(const std::string& text);
unsigned long long parse_u64(const std::string& text);

// Double-quotes a field when it contains a comma or quote (class shorthands
// like rich:m=5,labels=2 embed commas).
std::string csv_escape(const std::string& field);
std::vector<std::string> split_csv_line(const std::string& line);

// key=value configuration text: one pair per line, # comments, values may
// be double-quoted. Returns pairs in file order.
std::vector<std::pair<std::string, std::string>> parse_key_value_text(
    const std::string& text, const std::string& origin);

}  // namespace alab
