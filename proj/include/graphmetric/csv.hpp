#ifndef GRAPHMETRIC_CSV_HPP
#define GRAPHMETRIC_CSV_HPP

#include <charconv>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include "elemental_metric.hpp"
#include "errors.hpp"
#include "product_metric.hpp"

namespace graphmetric {

namespace detail {

inline std::vector<double> split_csv_numbers(const std::string& line, const char* what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) comma = line.size();
        std::size_t a = pos, b = comma;
        while (a < b && (line[a] == ' ' || line[a] == '\t')) ++a;
        while (b > a && (line[b - 1] == ' ' || line[b - 1] == '\t' || line[b - 1] == '\r')) --b;
        if (a == b) throw parse_error(std::string(what) + ": empty field");
        double v = 0.0;
        const auto res = std::from_chars(line.data() + a, line.data() + b, v);
        if (res.ec != std::errc{} || res.ptr != line.data() + b)
            throw parse_error(std::string(what) + ": bad number \"" + line.substr(a, b - a) + "\"");
        out.push_back(v);
        pos = comma + 1;
        if (comma == line.size()) break;
    }
    return out;
}

inline bool skippable_line(const std::string& line) {
    for (char c : line)
        if (c != ' ' && c != '\t' && c != '\r') return c == '#';
    return true; // blank
}

} // namespace detail

// Table metric file: first data line is the point count n, followed by n rows
// of n comma-separated distances (row major). Blank lines and lines starting
// with '#' are ignored. Validation (symmetry, zero diagonal, range, triangle
// inequality) happens in the table constructor.
inline elemental_metric read_table_metric(std::istream& in) {
    std::string line;
    long n = -1;
    std::vector<double> matrix;
    long rows = 0;
    while (std::getline(in, line)) {
        if (detail::skippable_line(line)) continue;
        if (n < 0) {
            const auto head = detail::split_csv_numbers(line, "table metric header");
            if (head.size() != 1 || head[0] < 1 || head[0] != static_cast<long>(head[0]))
                throw parse_error("table metric: header must be the point count");
            n = static_cast<long>(head[0]);
            continue;
        }
        const auto row = detail::split_csv_numbers(line, "table metric row");
        if (static_cast<long>(row.size()) != n)
            throw parse_error("table metric: row " + std::to_string(rows) + " has " +
                              std::to_string(row.size()) + " fields, expected " +
                              std::to_string(n));
        matrix.insert(matrix.end(), row.begin(), row.end());
        ++rows;
    }
    if (n < 0) throw parse_error("table metric: empty input");
    if (rows != n)
        throw parse_error("table metric: expected " + std::to_string(n) + " rows, got " +
                          std::to_string(rows));
    try {
        return elemental_metric::table(std::move(matrix), static_cast<std::size_t>(n));
    } catch (const invalid_parameter& e) {
        throw parse_error(std::string("table metric: ") + e.what());
    }
}

inline elemental_metric read_table_metric(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    try {
        return read_table_metric(in);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

// Points file: one product point per line, comma-separated coordinates.
// All rows must have the same width.
inline std::vector<product_point> read_points(std::istream& in) {
    std::vector<product_point> points;
    std::string line;
    while (std::getline(in, line)) {
        if (detail::skippable_line(line)) continue;
        points.push_back(detail::split_csv_numbers(line, "points row"));
        if (points.size() > 1 && points.back().size() != points.front().size())
            throw parse_error("points: row " + std::to_string(points.size() - 1) + " has " +
                              std::to_string(points.back().size()) + " coordinates, expected " +
                              std::to_string(points.front().size()));
    }
    return points;
}

inline std::vector<product_point> read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    try {
        return read_points(in);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

} // namespace graphmetric

#endif
