#include "hyperzeta/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyperzeta/quadrature.hpp"

namespace hyperzeta {

double bessel_k_half_integer(int m, double z) {
    if (m < 0) throw std::invalid_argument("bessel_k_half_integer: m must be >= 0");
    if (!(z > 0) || !std::isfinite(z)) throw std::domain_error("bessel_k: z must be positive and finite");
    // term_i = (m+i)! / (i! (m-i)! (2z)^i), built incrementally.
    double term = 1.0;
    double sum = 1.0;
    for (int i = 1; i <= m; ++i) {
        term *= static_cast<double>((m + i) * (m - i + 1)) / (static_cast<double>(i) * 2.0 * z);
        sum += term;
    }
    return std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z) * sum;
}

double bessel_k(double order, double z) {
    if (!std::isfinite(order) || !std::isfinite(z)) throw std::domain_error("bessel_k: non-finite argument");
    if (!(z > 0)) throw std::domain_error("bessel_k: z must be positive");
    const double nu = std::fabs(order);

    double twice = 2.0 * nu;
    if (twice == std::floor(twice) && std::fmod(twice, 2.0) == 1.0 && nu < 64)
        return bessel_k_half_integer(static_cast<int>(nu - 0.5), z);

    // Integrand peak: t^2 + (nu+1) t - z^2/4 = 0.
    const double b = nu + 1.0;
    const double peak = 0.5 * (std::sqrt(b * b + z * z) - b);
    const double log_scale = -(nu + 1.0) * std::log(2.0) + nu * std::log(z);
    auto integrand = [&](double t) {
        return std::exp(log_scale - (nu + 1.0) * std::log(t) - t - z * z / (4.0 * t));
    };
    return integrate_half_line_or_throw<double>(integrand, peak > 0 ? peak : z * z / 4.0, 1e-13, "bessel_k", 12);
}

}  // namespace hyperzeta
