#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hyperzeta/pi_value.hpp"

namespace hyperzeta {

/// One published anomaly value: exact form plus the printed decimal.
struct GoldenEntry {
    std::string table;  ///< "table1" (conformal scalar) or "table2" (p-forms)
    int dimension = 0;
    int form_order = 0;
    PiValue exact;
    std::string numerical;
};

/// Reference values compiled into the library (same content as
/// data/golden_tables.json).
std::vector<GoldenEntry> builtin_golden();
std::vector<GoldenEntry> parse_golden(std::string_view text, std::string_view source = "<golden>");
std::vector<GoldenEntry> load_golden(const std::filesystem::path& path);

/// True when `value` agrees with the printed decimal to `digits` significant
/// digits: |value - printed| below one unit in the last printed place. The
/// published decimals are sometimes truncated rather than rounded, so exact
/// string equality would be too strict by one unit.
bool agrees_to_digits(const PiValue& value, std::string_view printed, int digits = 6);

}  // namespace hyperzeta
