#ifndef ONTOSIM_REPORT_HPP
#define ONTOSIM_REPORT_HPP

#include <istream>
#include <string>
#include <vector>

namespace ontosim {

/// Square labelled matrix; rows and columns share `labels`.
struct LabelledMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;
};

/*
 * CSV dialect: comma separated, no quoting. The first row is an empty cell
 * followed by the column labels; every other row starts with its label.
 */
std::string to_csv(const LabelledMatrix& m, int precision);
std::string to_json(const LabelledMatrix& m, double deg, int precision);

/// Reads a baseline table. Column labels may be a permutation of the row
/// labels; the result is ordered by the column header. Throws InvalidBaseline.
LabelledMatrix read_matrix_csv(std::istream& in);

struct CellDelta {
    std::string row;
    std::string col;
    double ours = 0.0;
    double baseline = 0.0;
    double delta = 0.0;  // ours - baseline
};

struct ComparisonReport {
    std::vector<CellDelta> cells;
    double max_abs_delta = 0.0;
};

/// Compares cell by cell after rounding `ours` to `precision` decimals.
/// Labels must match exactly (same order). Throws InvalidBaseline.
ComparisonReport compare_matrices(const LabelledMatrix& ours, const LabelledMatrix& baseline, int precision);

std::string render_report(const ComparisonReport& report, int precision);

}  // namespace ontosim

#endif  // ONTOSIM_REPORT_HPP
