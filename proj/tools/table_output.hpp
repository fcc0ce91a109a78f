// Tabular scenario output: deterministic CSV (17 significant digits, "inf" /
// "nan" sentinels) and a JSON mirror of the same fields.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace blochpath_cli {

struct Table {
    std::string scenario;
    std::vector<std::pair<std::string, std::string>> params;  // ordered key=value
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> trailing_comments;  // e.g. the fitted slope line

    void add_param(const std::string& key, const std::string& value) {
        params.emplace_back(key, value);
    }
    void add_param(const std::string& key, double value);
};

std::string format_double(double v);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

/// Writes to the path, or to stdout when path is "-".
void write_output(const Table& table, const std::string& path, const std::string& format);

}  // namespace blochpath_cli
