#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "hyperzeta/manifold.hpp"

using namespace hyperzeta;

namespace {

const std::string kMinimal = R"({
  "format": "hyperzeta-manifold",
  "format_version": 1,
  "dimension": 2,
  "volume": 12.5,
  "betti": [1, 0, 1],
  "geodesics": []
})";

std::string with(const std::string& from, const std::string& to) {
    std::string s = kMinimal;
    s.replace(s.find(from), from.size(), to);
    return s;
}

}  // namespace

TEST_CASE("manifold: minimal document") {
    ManifoldData m = parse_manifold(kMinimal);
    CHECK(m.dimension() == 2);
    CHECK(m.volume() == 12.5);
    CHECK(m.chi_one() == 1.0);
    CHECK(m.betti() == std::vector<long>{1, 0, 1});
    CHECK(m.geodesics().empty());
    CHECK(m.rho0_squared() == 0.25);
}

TEST_CASE("manifold: rule violations are named") {
    CHECK_THROWS_WITH_AS(parse_manifold(with("\"geodesics\": []", "\"geodesics\": [{\"length\": 0, \"power\": 1}]")),
                         doctest::Contains("length must be positive"), ManifoldError);
    CHECK_THROWS_WITH_AS(parse_manifold(with("\"dimension\": 2", "\"dimension\": 3")),
                         doctest::Contains("odd dimensions out of scope"), ManifoldError);
    CHECK_THROWS_WITH_AS(parse_manifold(with("\"betti\": [1, 0, 1]", "\"betti\": [1, 0]")),
                         doctest::Contains("n+1 entries"), ManifoldError);
    CHECK_THROWS_WITH_AS(parse_manifold(with("\"volume\": 12.5", "\"volume\": 12.5, \"colour\": 1")),
                         doctest::Contains("field 'colour': unknown field"), ManifoldError);
    CHECK_THROWS_WITH_AS(
        parse_manifold(with("\"geodesics\": []", "\"geodesics\": [{\"length\": 1, \"power\": 1, \"holonomy\": [1, 1]}]")),
        doctest::Contains("c_gamma is required"), ManifoldError);
    CHECK_THROWS_WITH_AS(
        parse_manifold(with("\"geodesics\": []", "\"geodesics\": [{\"length\": 1, \"power\": 0}]")),
        doctest::Contains("field 'geodesics[0].power': power must be >= 1"), ManifoldError);
    CHECK_THROWS_WITH_AS(parse_manifold(with("\"format_version\": 1", "\"format_version\": 2")),
                         doctest::Contains("unsupported format version"), ManifoldError);
    CHECK_THROWS_WITH_AS(parse_manifold(with("\"volume\": 12.5", "\"volume\": \"big\"")),
                         doctest::Contains("field 'volume': expected a number"), ManifoldError);
    CHECK_THROWS_WITH_AS(parse_manifold(with("\"geodesics\": []", "\"geodesics\": []\n  ,,"), "bad.json"),
                         doctest::Contains("bad.json: parse error at line 8, column 4"), ManifoldError);
    CHECK_THROWS_AS(load_manifold("/nonexistent/file.json"), ManifoldError);
}

TEST_CASE("manifold: conformance file") {
    ManifoldData m = load_manifold(HYPERZETA_SOURCE_DIR "/tests/data/conformance.manifold.json");
    REQUIRE(m.geodesics().size() == 4);
    CHECK(m.geodesics()[0].length == 2.25);
    CHECK(m.geodesics()[0].chi_gamma == -1.0);
    CHECK(m.geodesics()[1].c_gamma == doctest::Approx(trivial_holonomy_c(4, 3.5)).epsilon(1e-15));
    CHECK(m.geodesics()[2].power == 2);
    CHECK(m.geodesics()[3].character(4, 1) == -1.0);
    CHECK(m.geodesics()[1].character(4, 1) == 3.0);
    CHECK(m.geodesics()[1].character(4, 4) == 0.0);
}

TEST_CASE("manifold: trivial holonomy C(gamma)") {
    CHECK(trivial_holonomy_c(2, 1.0) == doctest::Approx(0.95951737566747186).epsilon(1e-15));
    CHECK(trivial_holonomy_c(2, 40.0) == doctest::Approx(std::exp(-20.0)).epsilon(1e-15));
    for (int n : {2, 4, 6, 8, 12}) {
        double prev = trivial_holonomy_c(n, 1.0);
        for (double t = 1.05; t <= 20.0; t += 0.05) {
            double cur = trivial_holonomy_c(n, t);
            CHECK(cur < prev);
            prev = cur;
        }
    }
    CHECK_THROWS_AS(trivial_holonomy_c(2, 0.0), std::invalid_argument);
}

TEST_CASE("manifold: synthetic spectra") {
    CHECK(synth_spectrum(1, 0, 2.0, 3, 2).empty());
    CHECK(synth_spectrum(42, 4, 2.0, 2, 4) == synth_spectrum(42, 4, 2.0, 2, 4));
    CHECK(synth_spectrum(42, 4, 2.0, 2, 4) != synth_spectrum(43, 4, 2.0, 2, 4));

    auto s = synth_spectrum(9, 2, 1.0, 3, 2);
    REQUIRE(s.size() == 6);
    std::vector<double> primitives;
    for (const auto& g : s)
        if (g.power == 1) primitives.push_back(g.length);
    REQUIRE(primitives.size() == 2);
    for (const auto& g : s) {
        CHECK(g.trivial_holonomy());
        CHECK(g.c_gamma == trivial_holonomy_c(2, g.length));
        bool found = false;
        for (double t : primitives) found = found || (g.length == g.power * t);
        CHECK(found);
    }
    for (double t : primitives) {
        CHECK(t >= 1.0);
        CHECK(t < 11.0);
    }
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1].length <= s[i].length);
}

TEST_CASE("manifold: trivial characters are binomially symmetric") {
    GeodesicClass g;
    for (int n = 2; n <= 12; n += 2)
        for (int p = 0; p < n; ++p) CHECK(g.character(n, p) == g.character(n, n - 1 - p));
}

TEST_CASE("manifold: save and load round trip") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> vol(0.1, 100.0);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + 2 * (trial % 4);
        auto spectrum = synth_spectrum(rng(), trial % 6, 0.5 + trial * 0.1, 1 + trial % 3, n);
        if (trial % 5 == 0 && !spectrum.empty()) {
            spectrum.front().holonomy_character.assign(static_cast<std::size_t>(n), -0.5);
            spectrum.front().chi_gamma = 2.0 / 3.0;
        }
        std::vector<long> betti;
        if (trial % 2 == 0) betti.assign(static_cast<std::size_t>(n) + 1, trial);
        ManifoldData m = ManifoldData::create(n, vol(rng), betti, spectrum, 1.0 + trial, 0.5 + trial);
        CHECK(parse_manifold(dump_manifold(m)) == m);
        auto path = std::filesystem::path(HYPERZETA_TEST_TMP) / "roundtrip.manifold.json";
        save_manifold(m, path);
        CHECK(load_manifold(path) == m);
    }
}

TEST_CASE("manifold: create sorts and validates") {
    GeodesicClass a, b;
    a.length = 5.0;
    b.length = 2.0;
    ManifoldData m = ManifoldData::create(2, 1.0, {}, {a, b});
    CHECK(m.geodesics()[0].length == 2.0);
    CHECK_FALSE(m.has_betti());
    CHECK_THROWS_AS(ManifoldData::create(2, -1.0, {}, {}), ManifoldError);
    CHECK_THROWS_AS(ManifoldData::create(2, 1.0, {1, -1, 1}, {}), ManifoldError);
}
