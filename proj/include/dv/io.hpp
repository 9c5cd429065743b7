#pragma once

#include <iosfwd>
#include <string>

#include "dv/matrix.hpp"

namespace dv {

// Matrix file format (".dvm"): one row per line, entries comma-separated
// non-negative decimal integers, no header, newline-terminated.
matrix load_matrix(const std::string& path);
matrix read_matrix(std::istream& in);
void save_matrix(const matrix& m, const std::string& path);
void write_matrix(const matrix& m, std::ostream& out);

// Solutions are one line of comma-separated ascending 1-based column
// indices.
std::string format_solution(const solution& s);
solution parse_solution(const std::string& line, int d);

}  // namespace dv
