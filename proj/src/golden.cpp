#include "hyperzeta/golden.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hyperzeta/rational.hpp"

namespace hyperzeta {

namespace {

// Mirror of data/golden_tables.json; a unit test keeps the two in sync.
constexpr std::string_view kBuiltinGolden = R"json(
{
  "format": "hyperzeta-golden",
  "format_version": 1,
  "table1": [
    {"n": 2,  "p": 0, "exact": "-1/12 * pi^-1",           "numerical": "-0.0265258"},
    {"n": 4,  "p": 0, "exact": "-1/240 * pi^-2",          "numerical": "-4.22172e-4"},
    {"n": 6,  "p": 0, "exact": "-5/4032 * pi^-3",         "numerical": "-3.99945e-5"},
    {"n": 8,  "p": 0, "exact": "-23/34560 * pi^-4",       "numerical": "-6.83210e-6"},
    {"n": 10, "p": 0, "exact": "-263/506880 * pi^-5",     "numerical": "-1.69551e-6"},
    {"n": 12, "p": 0, "exact": "-133787/251596800 * pi^-6", "numerical": "-5.53107e-7"},
    {"n": 14, "p": 0, "exact": "-157009/232243200 * pi^-7", "numerical": "-2.23837e-7"}
  ],
  "table2": [
    {"n": 2,  "p": 0, "exact": "-1/12 * pi^-1",            "numerical": "-0.0265258"},
    {"n": 4,  "p": 0, "exact": "29/240 * pi^-2",           "numerical": "0.012243"},
    {"n": 4,  "p": 1, "exact": "-67/160 * pi^-2",          "numerical": "-0.0424282"},
    {"n": 6,  "p": 0, "exact": "-1139/4032 * pi^-3",       "numerical": "-0.00911074"},
    {"n": 6,  "p": 1, "exact": "2539/2016 * pi^-3",        "numerical": "0.0406184"},
    {"n": 6,  "p": 2, "exact": "-2005/1792 * pi^-3",       "numerical": "-0.036085"},
    {"n": 8,  "p": 0, "exact": "32377/34560 * pi^-4",      "numerical": "0.00961753"},
    {"n": 8,  "p": 1, "exact": "-1368853/276480 * pi^-4",  "numerical": "-0.0508269"},
    {"n": 8,  "p": 2, "exact": "101665/41472 * pi^-4",     "numerical": "0.0251662"},
    {"n": 8,  "p": 3, "exact": "118459/34560 * pi^-4",     "numerical": "0.035188"},
    {"n": 10, "p": 0, "exact": "-2046263/506880 * pi^-5",  "numerical": "-0.0131919"},
    {"n": 10, "p": 1, "exact": "16454263/675840 * pi^-5",  "numerical": "0.0795582"},
    {"n": 10, "p": 2, "exact": "-2475365/811008 * pi^-5",  "numerical": "-0.00997389"},
    {"n": 10, "p": 3, "exact": "-34196177/7096320 * pi^-5", "numerical": "-0.0157469"},
    {"n": 10, "p": 4, "exact": "-14020681/135168 * pi^-5", "numerical": "-0.338958"}
  ]
}
)json";

}  // namespace

std::vector<GoldenEntry> parse_golden(std::string_view text, std::string_view source) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string(source) + ": " + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != "hyperzeta-golden")
        throw std::runtime_error(std::string(source) + ": not a hyperzeta-golden document");
    std::vector<GoldenEntry> out;
    for (const char* table : {"table1", "table2"}) {
        if (!doc.contains(table) || !doc[table].is_array())
            throw std::runtime_error(std::string(source) + ": missing array '" + table + "'");
        for (const auto& row : doc[table]) {
            try {
                GoldenEntry e;
                e.table = table;
                e.dimension = row.at("n").get<int>();
                e.form_order = row.at("p").get<int>();
                e.exact = PiValue::parse(row.at("exact").get<std::string>());
                e.numerical = row.at("numerical").get<std::string>();
                out.push_back(std::move(e));
            } catch (const std::exception& ex) {
                throw std::runtime_error(std::string(source) + ": bad entry in " + table + ": " + ex.what());
            }
        }
    }
    return out;
}

std::vector<GoldenEntry> builtin_golden() { return parse_golden(kBuiltinGolden, "<builtin golden>"); }

std::vector<GoldenEntry> load_golden(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path.string() + ": cannot open golden file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_golden(buf.str(), path.string());
}

bool agrees_to_digits(const PiValue& value, std::string_view printed, int digits) {
    const double reference = Rational::parse(printed).to_double();
    const double actual = value.to_double();
    if (reference == 0.0) return actual == 0.0;
    const double exponent = std::floor(std::log10(std::fabs(reference)));
    const double unit = std::pow(10.0, exponent - digits + 1);
    return std::fabs(actual - reference) < unit;
}

}  // namespace hyperzeta
