#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperzeta {

/// Conjugacy class gamma = delta^j of a closed geodesic.
struct GeodesicClass {
    double length = 1.0;  ///< t_gamma > 0
    int power = 1;        ///< j(gamma) >= 1
    double c_gamma = 1.0;
    double chi_gamma = 1.0;
    /// chi_{sigma_p}(m_gamma) for p = 0..n-1; empty means trivial holonomy,
    /// where the character is dim Lambda^p C^{n-1} = C(n-1, p).
    std::vector<double> holonomy_character;

    bool trivial_holonomy() const { return holonomy_character.empty(); }
    /// chi_{sigma_p}(m_gamma); 0 outside 0 <= p <= n-1.
    double character(int n, int p) const;

    friend bool operator==(const GeodesicClass&, const GeodesicClass&) = default;
};

/// Validated spectral input for Gamma\H^n. Immutable once built.
class ManifoldData {
public:
    /// Validates and normalizes (geodesics sorted by length). Throws
    /// ManifoldError naming the violated rule. An empty `betti` means the
    /// Betti numbers are unknown; otherwise it must hold b_0..b_n.
    static ManifoldData create(int dimension, double volume, std::vector<long> betti,
                               std::vector<GeodesicClass> geodesics, double chi_one = 1.0, double radius = 1.0);

    int dimension() const { return dimension_; }
    int rank() const { return dimension_ / 2; }
    double volume() const { return volume_; }
    double chi_one() const { return chi_one_; }
    double radius() const { return radius_; }
    /// rho0^2 = ((n-1)/2)^2
    double rho0_squared() const { return 0.25 * (dimension_ - 1) * (dimension_ - 1); }
    const std::vector<long>& betti() const { return betti_; }
    bool has_betti() const { return !betti_.empty(); }
    const std::vector<GeodesicClass>& geodesics() const { return geodesics_; }

    friend bool operator==(const ManifoldData&, const ManifoldData&) = default;

private:
    ManifoldData() = default;

    int dimension_ = 2;
    double volume_ = 1.0;
    double chi_one_ = 1.0;
    double radius_ = 1.0;
    std::vector<long> betti_;
    std::vector<GeodesicClass> geodesics_;
};

class ManifoldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kManifoldFormatName = "hyperzeta-manifold";
inline constexpr int kManifoldFormatVersion = 1;

/// Parses the JSON manifold document. `source` labels diagnostics.
ManifoldData parse_manifold(std::string_view text, std::string_view source = "<input>");
ManifoldData load_manifold(const std::filesystem::path& path);
/// Canonical serialization; parse_manifold(dump_manifold(m)) == m.
std::string dump_manifold(const ManifoldData& manifold);
void save_manifold(const ManifoldData& manifold, const std::filesystem::path& path);

/// C(gamma) for trivial holonomy: e^{-rho0 t} (1 - e^{-t})^{-(n-1)}.
/// Ad(e^{t H0}) acts on n0 (dimension n-1) by e^{t}, so
/// |det(Ad^{-1} - 1)| = (1 - e^{-t})^{n-1}.
double trivial_holonomy_c(int n, double t);

/// Deterministic synthetic length spectrum: `count` primitive lengths drawn
/// uniformly from [min_length, min_length + 10) with a seeded 64-bit
/// Mersenne twister, each expanded to powers j = 1..max_power with length
/// j * t_delta, trivial holonomy and auto-filled c_gamma. Sorted by length.
std::vector<GeodesicClass> synth_spectrum(std::uint64_t seed, int count, double min_length, int max_power, int n);

}  // namespace hyperzeta
