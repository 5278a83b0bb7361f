#include "hyperzeta/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hyperzeta {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& rule) {
    throw ManifoldError(where.empty() ? rule : "field '" + where + "': " + rule);
}

double binomial_double(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return std::round(c);
}

void check_keys(const json& object, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& item : object.items())
        if (!allowed.count(item.key()))
            fail(where.empty() ? item.key() : where + "." + item.key(), "unknown field");
}

const json& require(const json& object, const char* key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end()) fail(where.empty() ? key : where + "." + key, "missing required field");
    return *it;
}

double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) fail(where, "expected a number");
    return v.get<double>();
}

long as_integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) fail(where, "expected an integer");
    return v.get<long>();
}

std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

GeodesicClass parse_geodesic(const json& g, int n, const std::string& where) {
    if (!g.is_object()) fail(where, "expected an object");
    check_keys(g, {"length", "power", "c_gamma", "chi_gamma", "holonomy"}, where);
    GeodesicClass out;
    out.length = as_number(require(g, "length", where), where + ".length");
    out.power = static_cast<int>(as_integer(require(g, "power", where), where + ".power"));
    if (g.contains("chi_gamma")) out.chi_gamma = as_number(g["chi_gamma"], where + ".chi_gamma");
    if (g.contains("holonomy")) {
        const json& h = g["holonomy"];
        if (h.is_string()) {
            if (h.get<std::string>() != "trivial") fail(where + ".holonomy", "expected \"trivial\" or an array");
        } else if (h.is_array()) {
            for (std::size_t i = 0; i < h.size(); ++i)
                out.holonomy_character.push_back(as_number(h[i], where + ".holonomy[" + std::to_string(i) + "]"));
            if (out.holonomy_character.size() != static_cast<std::size_t>(n))
                fail(where + ".holonomy", "character list must have n entries (p = 0..n-1)");
        } else {
            fail(where + ".holonomy", "expected \"trivial\" or an array");
        }
    }
    if (g.contains("c_gamma")) {
        out.c_gamma = as_number(g["c_gamma"], where + ".c_gamma");
    } else if (out.trivial_holonomy()) {
        if (!(out.length > 0)) fail(where + ".length", "length must be positive");
        out.c_gamma = trivial_holonomy_c(n, out.length);
    } else {
        fail(where + ".c_gamma", "c_gamma is required when holonomy is not trivial");
    }
    return out;
}

}  // namespace

double GeodesicClass::character(int n, int p) const {
    if (p < 0 || p > n - 1) return 0.0;
    if (trivial_holonomy()) return binomial_double(n - 1, p);
    return holonomy_character.at(static_cast<std::size_t>(p));
}

ManifoldData ManifoldData::create(int dimension, double volume, std::vector<long> betti,
                                  std::vector<GeodesicClass> geodesics, double chi_one, double radius) {
    if (dimension < 2) fail("dimension", "dimension must be >= 2");
    if (dimension % 2 != 0) fail("dimension", "odd dimensions out of scope");
    if (!(volume > 0) || !std::isfinite(volume)) fail("volume", "volume must be positive");
    if (!std::isfinite(chi_one)) fail("chi_one", "chi_one must be finite");
    if (!(radius > 0) || !std::isfinite(radius)) fail("radius", "radius must be positive");
    if (!betti.empty()) {
        if (betti.size() != static_cast<std::size_t>(dimension) + 1)
            fail("betti", "betti list must hold b_0..b_n (n+1 entries)");
        for (long b : betti)
            if (b < 0) fail("betti", "Betti numbers must be nonnegative");
    }
    for (std::size_t i = 0; i < geodesics.size(); ++i) {
        const auto& g = geodesics[i];
        std::string where = "geodesics[" + std::to_string(i) + "]";
        if (!(g.length > 0) || !std::isfinite(g.length)) fail(where + ".length", "length must be positive");
        if (g.power < 1) fail(where + ".power", "power must be >= 1");
        if (!(g.c_gamma > 0) || !std::isfinite(g.c_gamma)) fail(where + ".c_gamma", "c_gamma must be positive");
        if (!std::isfinite(g.chi_gamma)) fail(where + ".chi_gamma", "chi_gamma must be finite");
        if (!g.trivial_holonomy() && g.holonomy_character.size() != static_cast<std::size_t>(dimension))
            fail(where + ".holonomy", "character list must have n entries (p = 0..n-1)");
    }
    std::stable_sort(geodesics.begin(), geodesics.end(),
                     [](const GeodesicClass& a, const GeodesicClass& b) { return a.length < b.length; });

    ManifoldData m;
    m.dimension_ = dimension;
    m.volume_ = volume;
    m.chi_one_ = chi_one;
    m.radius_ = radius;
    m.betti_ = std::move(betti);
    m.geodesics_ = std::move(geodesics);
    return m;
}

ManifoldData parse_manifold(std::string_view text, std::string_view source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ManifoldError(std::string(source) + ": parse error at " + line_col(text, e.byte) + ": " + e.what());
    }
    try {
        if (!doc.is_object()) fail("", "top level must be an object");
        check_keys(doc, {"format", "format_version", "dimension", "volume", "chi_one", "radius", "betti", "geodesics"},
                   "");
        const json& format = require(doc, "format", "");
        if (!format.is_string() || format.get<std::string>() != kManifoldFormatName)
            fail("format", "expected \"" + std::string(kManifoldFormatName) + "\"");
        if (as_integer(require(doc, "format_version", ""), "format_version") != kManifoldFormatVersion)
            fail("format_version", "unsupported format version (expected " + std::to_string(kManifoldFormatVersion) + ")");

        long n = as_integer(require(doc, "dimension", ""), "dimension");
        if (n % 2 != 0) fail("dimension", "odd dimensions out of scope");
        if (n < 2 || n > 1000) fail("dimension", "dimension must be in [2, 1000]");
        double volume = as_number(require(doc, "volume", ""), "volume");
        double chi_one = doc.contains("chi_one") ? as_number(doc["chi_one"], "chi_one") : 1.0;
        double radius = doc.contains("radius") ? as_number(doc["radius"], "radius") : 1.0;

        std::vector<long> betti;
        if (doc.contains("betti")) {
            const json& b = doc["betti"];
            if (!b.is_array()) fail("betti", "expected an array");
            for (std::size_t i = 0; i < b.size(); ++i)
                betti.push_back(as_integer(b[i], "betti[" + std::to_string(i) + "]"));
        }

        std::vector<GeodesicClass> geodesics;
        const json& g = require(doc, "geodesics", "");
        if (!g.is_array()) fail("geodesics", "expected an array");
        for (std::size_t i = 0; i < g.size(); ++i)
            geodesics.push_back(parse_geodesic(g[i], static_cast<int>(n), "geodesics[" + std::to_string(i) + "]"));

        return ManifoldData::create(static_cast<int>(n), volume, std::move(betti), std::move(geodesics), chi_one,
                                    radius);
    } catch (const ManifoldError& e) {
        throw ManifoldError(std::string(source) + ": " + e.what());
    }
}

ManifoldData load_manifold(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ManifoldError(path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifold(buf.str(), path.string());
}

std::string dump_manifold(const ManifoldData& m) {
    json doc;
    doc["format"] = kManifoldFormatName;
    doc["format_version"] = kManifoldFormatVersion;
    doc["dimension"] = m.dimension();
    doc["volume"] = m.volume();
    doc["chi_one"] = m.chi_one();
    doc["radius"] = m.radius();
    doc["betti"] = m.betti();
    json geodesics = json::array();
    for (const auto& g : m.geodesics()) {
        json item;
        item["length"] = g.length;
        item["power"] = g.power;
        item["c_gamma"] = g.c_gamma;
        item["chi_gamma"] = g.chi_gamma;
        if (g.trivial_holonomy()) item["holonomy"] = "trivial";
        else item["holonomy"] = g.holonomy_character;
        geodesics.push_back(std::move(item));
    }
    doc["geodesics"] = std::move(geodesics);
    return doc.dump(2) + "\n";
}

void save_manifold(const ManifoldData& manifold, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ManifoldError(path.string() + ": cannot open file for writing");
    out << dump_manifold(manifold);
}

double trivial_holonomy_c(int n, double t) {
    if (!(t > 0) || !std::isfinite(t)) throw std::invalid_argument("trivial_holonomy_c: t must be positive");
    const double rho0 = 0.5 * (n - 1);
    return std::exp(-rho0 * t) * std::pow(-std::expm1(-t), -(n - 1));
}

std::vector<GeodesicClass> synth_spectrum(std::uint64_t seed, int count, double min_length, int max_power, int n) {
    if (count < 0) throw std::invalid_argument("synth_spectrum: count must be >= 0");
    if (!(min_length > 0)) throw std::invalid_argument("synth_spectrum: min_length must be positive");
    if (max_power < 1) throw std::invalid_argument("synth_spectrum: max_power must be >= 1");
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("synth_spectrum: odd dimensions out of scope");

    // top 53 bits -> [0, 1)
    std::mt19937_64 engine(seed);
    std::vector<GeodesicClass> out;
    for (int i = 0; i < count; ++i) {
        double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        double primitive = min_length + 10.0 * u;
        for (int j = 1; j <= max_power; ++j) {
            GeodesicClass g;
            g.power = j;
            g.length = j * primitive;
            g.c_gamma = trivial_holonomy_c(n, g.length);
            out.push_back(g);
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const GeodesicClass& a, const GeodesicClass& b) { return a.length < b.length; });
    return out;
}

}  // namespace hyperzeta
