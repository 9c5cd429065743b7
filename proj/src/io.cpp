#include "dv/io.hpp"

#include <fstream>
#include <sstream>

namespace dv {

namespace {

symbol parse_symbol(const std::string& token, long line) {
    if (token.empty()) throw parse_error("empty entry", line);
    for (char c : token)
        if (c < '0' || c > '9') throw parse_error("non-integer token '" + token + "'", line);
    try {
        unsigned long v = std::stoul(token);
        if (v > 0xffffffffUL) throw std::out_of_range("");
        return static_cast<symbol>(v);
    } catch (const std::out_of_range&) {
        throw parse_error("entry '" + token + "' out of range", line);
    }
}

std::vector<symbol> parse_csv_row(const std::string& line_text, long line) {
    std::vector<symbol> row;
    std::string token;
    std::istringstream ss(line_text);
    while (std::getline(ss, token, ',')) row.push_back(parse_symbol(token, line));
    if (!line_text.empty() && line_text.back() == ',') throw parse_error("trailing comma", line);
    return row;
}

}  // namespace

matrix read_matrix(std::istream& in) {
    std::vector<std::vector<symbol>> rows;
    std::string line_text;
    long line = 0;
    while (std::getline(in, line_text)) {
        ++line;
        if (!line_text.empty() && line_text.back() == '\r') line_text.pop_back();
        if (line_text.empty()) {
            // allow a trailing blank line, nothing else
            if (in.peek() != std::istream::traits_type::eof()) throw parse_error("blank line", line);
            break;
        }
        auto row = parse_csv_row(line_text, line);
        if (!rows.empty() && row.size() != rows.front().size())
            throw parse_error("ragged row: expected " + std::to_string(rows.front().size()) + " entries, got " +
                                  std::to_string(row.size()),
                              line);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("matrix file has no rows");
    try {
        return matrix::from_rows(rows);
    } catch (const contract_error& e) {
        throw contract_error(std::string(e.what()));
    }
}

matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_matrix(in);
}

void write_matrix(const matrix& m, std::ostream& out) {
    for (int i = 1; i <= m.n(); ++i) {
        for (int j = 1; j <= m.d(); ++j) {
            if (j > 1) out << ',';
            out << m.at(i, j);
        }
        out << '\n';
    }
}

void save_matrix(const matrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    write_matrix(m, out);
    if (!out) throw parse_error("write to '" + path + "' failed");
}

std::string format_solution(const solution& s) {
    std::string out;
    for (std::size_t i = 0; i < s.columns.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.columns[i]);
    }
    return out;
}

solution parse_solution(const std::string& line, int d) {
    std::vector<int> columns;
    if (!line.empty()) {
        std::string token;
        std::istringstream ss(line);
        while (std::getline(ss, token, ',')) {
            symbol v = parse_symbol(token, 1);
            columns.push_back(static_cast<int>(v));
        }
    }
    return make_solution(std::move(columns), d);
}

}  // namespace dv
