#include "table_output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

namespace blochpath_cli {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void Table::add_param(const std::string& key, double value) {
    params.emplace_back(key, format_double(value));
}

std::string to_csv(const Table& table) {
    std::string out = "# params: scenario=" + table.scenario;
    for (const auto& [k, v] : table.params) out += " " + k + "=" + v;
    out += "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ",";
        out += table.columns[i];
    }
    out += "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += format_double(row[i]);
        }
        out += "\n";
    }
    for (const auto& c : table.trailing_comments) out += "# " + c + "\n";
    return out;
}

std::string to_json(const Table& table) {
    nlohmann::ordered_json j;
    j["scenario"] = table.scenario;
    nlohmann::ordered_json params;
    for (const auto& [k, v] : table.params) params[k] = v;
    j["params"] = params;
    j["columns"] = table.columns;
    // non-finite values have no JSON representation and serialize as null
    j["rows"] = table.rows;
    if (!table.trailing_comments.empty()) j["notes"] = table.trailing_comments;
    return j.dump(2) + "\n";
}

void write_output(const Table& table, const std::string& path, const std::string& format) {
    const std::string payload = (format == "json") ? to_json(table) : to_csv(table);
    if (path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << payload;
    if (!f.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace blochpath_cli
