#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperzeta/anomaly.hpp"

namespace hyperzeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

enum class TableFormat { markdown, csv, plain };

/// Rendered anomaly grid: one record per (n, p) cell, exact and float strings.
struct OutputTable {
    struct Cell {
        int dimension;
        int form_order;
        bool excluded;
        std::string exact;
        std::string numeric;
        std::string note;
    };
    bool scalar = false;
    std::vector<int> dims;
    std::vector<int> forms;
    std::vector<Cell> cells;

    static OutputTable from(const AnomalyTable& table, int digits);
    std::string render(TableFormat format) const;
};

/// Float display digits: HYPERZETA_PRECISION if set (1..60), else 6.
int default_digits();

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Exit codes: 0 success, 1 verification/computation failure,
/// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperzeta::cli
