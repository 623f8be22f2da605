#include "ontosim/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "ontosim/graph.hpp"
#include "ontosim/numfmt.hpp"

namespace ontosim {

std::string to_csv(const LabelledMatrix& m, int precision) {
    std::string out;
    for (const auto& l : m.labels) out += "," + l;
    out += "\n";
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        out += m.labels[i];
        for (double v : m.values[i]) out += "," + format_fixed(v, precision);
        out += "\n";
    }
    return out;
}

std::string to_json(const LabelledMatrix& m, double deg, int precision) {
    nlohmann::ordered_json j;
    j["nodes"] = m.labels;
    j["deg"] = deg;
    auto rows = nlohmann::json::array();
    for (const auto& row : m.values) {
        auto cells = nlohmann::json::array();
        for (double v : row) cells.push_back(round_to(v, precision));
        rows.push_back(std::move(cells));
    }
    j["matrix"] = std::move(rows);
    return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        auto b = cell.find_first_not_of(" \t");
        auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_cell(const std::string& text, std::size_t line_no) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw OntologyError(ErrorCode::InvalidBaseline,
                            fmt::format("line {}: '{}' is not a number", line_no, text));
    }
    return v;
}

}  // namespace

LabelledMatrix read_matrix_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        rows.push_back(split_csv(line));
    }
    if (rows.empty()) throw OntologyError(ErrorCode::InvalidBaseline, "empty table");

    std::vector<std::string> cols(rows[0].begin() + 1, rows[0].end());
    const std::size_t n = cols.size();
    if (rows.size() != n + 1) {
        throw OntologyError(ErrorCode::InvalidBaseline,
                            fmt::format("{} columns but {} data rows", n, rows.size() - 1));
    }
    std::vector<std::string> row_labels;
    for (std::size_t r = 1; r <= n; ++r) {
        if (rows[r].size() != n + 1) {
            throw OntologyError(ErrorCode::InvalidBaseline, fmt::format("line {}: expected {} cells", r + 1, n + 1));
        }
        row_labels.push_back(rows[r][0]);
    }
    if (std::set(cols.begin(), cols.end()) != std::set(row_labels.begin(), row_labels.end()) ||
        std::set(cols.begin(), cols.end()).size() != n) {
        throw OntologyError(ErrorCode::InvalidBaseline, "row and column labels differ");
    }

    LabelledMatrix m{cols, std::vector<std::vector<double>>(n, std::vector<double>(n))};
    for (std::size_t r = 1; r <= n; ++r) {
        const std::size_t i = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), rows[r][0]) - cols.begin());
        for (std::size_t c = 0; c < n; ++c) m.values[i][c] = parse_cell(rows[r][c + 1], r + 1);
    }
    return m;
}

ComparisonReport compare_matrices(const LabelledMatrix& ours, const LabelledMatrix& baseline, int precision) {
    if (ours.labels != baseline.labels) {
        throw OntologyError(ErrorCode::InvalidBaseline, "matrices are over different labels");
    }
    ComparisonReport report;
    for (std::size_t i = 0; i < ours.labels.size(); ++i) {
        for (std::size_t j = 0; j < ours.labels.size(); ++j) {
            CellDelta d{ours.labels[i], ours.labels[j], round_to(ours.values[i][j], precision),
                        baseline.values[i][j], 0.0};
            d.delta = d.ours - d.baseline;
            report.max_abs_delta = std::max(report.max_abs_delta, std::abs(d.delta));
            report.cells.push_back(std::move(d));
        }
    }
    return report;
}

std::string render_report(const ComparisonReport& report, int precision) {
    std::string out = "row,col,ours,baseline,delta\n";
    for (const auto& c : report.cells) {
        out += fmt::format("{},{},{},{},{}\n", c.row, c.col, format_fixed(c.ours, precision),
                           format_fixed(c.baseline, precision), format_fixed(c.delta, precision));
    }
    out += "max_abs_delta=" + format_fixed(report.max_abs_delta, precision) + "\n";
    return out;
}

}  // namespace ontosim
