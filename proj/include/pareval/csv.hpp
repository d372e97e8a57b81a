#ifndef PAREVAL_CSV_HPP
#define PAREVAL_CSV_HPP

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pareval/errors.hpp"

namespace pareval {

/// Shortest round-trip decimal representation, locale-independent.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Fixed two-decimal formatting for the human-readable tables.
inline std::string format_fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

inline double parse_double(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ingestion_error(context + ": cannot parse number '" + s + "'");
    }
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> row_lines; // 1-based source line per row
};

/// Reads a CSV file, skipping blank lines and '#' comment lines.
inline CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ingestion_error(path + ": cannot open file");
    CsvTable t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv_line(line);
        if (t.header.empty()) {
            t.header = std::move(fields);
        } else {
            if (fields.size() != t.header.size())
                throw ingestion_error(path + ":" + std::to_string(lineno) + ": expected " +
                                      std::to_string(t.header.size()) + " fields, got " +
                                      std::to_string(fields.size()));
            t.rows.push_back(std::move(fields));
            t.row_lines.push_back(lineno);
        }
    }
    if (t.header.empty()) throw ingestion_error(path + ": missing header row");
    return t;
}

inline std::size_t column_index(const CsvTable& t, const std::string& name,
                                const std::string& path) {
    for (std::size_t i = 0; i < t.header.size(); ++i)
        if (t.header[i] == name) return i;
    throw ingestion_error(path + ": missing required column '" + name + "'");
}

} // namespace pareval

#endif
