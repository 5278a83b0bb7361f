#include "hyperzeta/heat_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/plancherel.hpp"
#include "hyperzeta/quadrature.hpp"
#include "hyperzeta/special.hpp"

namespace hyperzeta {

WideReal to_wide(const Rational& q) {
    WideReal out;
    mpfr_set_q(out.backend().data(), q.mpq().get_mpq_t(), MPFR_RNDN);
    return out;
}

namespace {

constexpr double kPi = std::numbers::pi;
// Terms examined when hunting for the smallest series term; reached only for
// t below ~pi^2/600.
constexpr int kSeriesSearchCap = 600;

// Fixed-tree pairwise summation: the result depends only on the input order.
double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

void check_form_index(const ManifoldData& m, int p, const char* what) {
    if (p < -1 || p > m.dimension() - 1)
        throw std::invalid_argument(std::string(what) + ": form index p=" + std::to_string(p) + " outside [-1, " +
                                    std::to_string(m.dimension() - 1) + "]");
}

void check_time(double t, const char* what) {
    if (!(t > 0) || !std::isfinite(t)) throw std::invalid_argument(std::string(what) + ": t must be positive");
}

double fermi(double r) {
    double e = std::exp(-2.0 * kPi * r);
    return e / (1.0 + e);
}

// (-1)^l (1 - 2^{-2l-2k-1}) B_{2(l+k+1)} / (k! (l+k+1))
Rational series_coefficient(int ell, int k) {
    const long m = ell + k + 1;
    Rational c = (Rational(1) - pow(Rational(2), -(2L * ell + 2L * k + 1))) * bernoulli(static_cast<unsigned>(2 * m)) /
                 (factorial(k) * Rational(m));
    return ell % 2 == 0 ? c : -c;
}

}  // namespace

// ---------------------------------------------------------------------------

double identity_heat_term(const ManifoldData& manifold, int p, double t) {
    check_form_index(manifold, p, "identity_heat_term");
    check_time(t, "identity_heat_term");
    if (p == -1) return 0.0;

    const int k = manifold.rank();
    const EvenPolynomial poly = plancherel_polynomial(k, p);
    const double pref = plancherel_prefactor(k, p);
    const double beta = p + manifold.rho0_squared();
    auto integrand = [&](double r) { return pref * r * poly.evaluate(r) * tanh_pi(r) * std::exp(-t * (r * r + beta)); };
    const double center = std::sqrt((2.0 * k - 1.0) / (2.0 * t));
    double half = integrate_half_line_or_throw<double>(integrand, center, 1e-13, "identity_heat_term", 12);
    return manifold.chi_one() * manifold.volume() / (4.0 * kPi) * 2.0 * half;
}

// ---------------------------------------------------------------------------

TanhMomentSeries<WideReal> tanh_moment_series_wide(int ell, const WideReal& t, int order) {
    if (ell < 0) throw std::invalid_argument("tanh_moment_series: l must be >= 0");
    if (!(t > 0)) throw std::invalid_argument("tanh_moment_series: t must be positive");
    if (order < -1) throw std::invalid_argument("tanh_moment_series: order must be >= -1");

    auto term = [&](int k) { return to_wide(series_coefficient(ell, k)) * pow(t, k); };

    TanhMomentSeries<WideReal> out;
    std::vector<WideReal> terms{term(0)};
    // Walk until the requested order is covered or the smallest term shows up.
    int k = 0;
    while (k < kSeriesSearchCap && (order == kOptimalTruncation || k <= order)) {
        terms.push_back(term(k + 1));
        if (abs(terms[k + 1]) >= abs(terms[k])) {
            out.optimal_index = k;
            break;
        }
        ++k;
    }

    int limit = out.optimal_index >= 0 ? out.optimal_index - 1 : static_cast<int>(terms.size()) - 2;
    int last = order < limit ? order : limit;
    out.clamped = order > limit;
    out.last_index = last;

    WideReal lead = to_wide(factorial(ell)) / pow(t, ell + 1);
    WideReal correction = 0;
    for (int i = 0; i <= last; ++i) correction += terms[static_cast<std::size_t>(i)];
    out.value = lead - correction;
    out.first_omitted = abs(terms[static_cast<std::size_t>(last + 1)]);
    return out;
}

TanhMomentSeries<double> tanh_moment_series(int ell, double t, int order) {
    auto wide = tanh_moment_series_wide(ell, WideReal(t), order);
    return {static_cast<double>(wide.value), static_cast<double>(wide.first_omitted), wide.last_index,
            wide.optimal_index, wide.clamped};
}

WideReal tanh_moment_quadrature_wide(int ell, const WideReal& t) {
    if (ell < 0 || !(t > 0)) throw std::invalid_argument("tanh_moment_quadrature: need l >= 0 and t > 0");
    const WideReal pi = boost::math::constants::pi<WideReal>();
    auto integrand = [&](const WideReal& r) { return pow(r, 2 * ell + 1) * exp(-t * r * r) * tanh(pi * r); };
    WideReal center = sqrt(WideReal(2 * ell + 1) / (2 * t));
    return 2 * integrate_half_line_or_throw<WideReal>(integrand, center, WideReal("1e-145"), "tanh_moment_quadrature",
                                                       16);
}

double tanh_moment_quadrature(int ell, double t) {
    if (ell < 0 || !(t > 0)) throw std::invalid_argument("tanh_moment_quadrature: need l >= 0 and t > 0");
    auto integrand = [&](double r) { return std::pow(r, 2 * ell + 1) * std::exp(-t * r * r) * tanh_pi(r); };
    double center = std::sqrt((2.0 * ell + 1.0) / (2.0 * t));
    return 2.0 * integrate_half_line_or_throw<double>(integrand, center, 1e-13, "tanh_moment_quadrature", 12);
}

// ---------------------------------------------------------------------------

HyperbolicSum hyperbolic_heat_term(const ManifoldData& manifold, int p, double t) {
    check_form_index(manifold, p, "hyperbolic_heat_term");
    check_time(t, "hyperbolic_heat_term");
    HyperbolicSum out;
    const auto& spectrum = manifold.geodesics();
    out.empty_spectrum = spectrum.empty();
    if (p == -1 || spectrum.empty()) return out;

    const int n = manifold.dimension();
    const double beta = p + manifold.rho0_squared();
    std::vector<double> terms;
    terms.reserve(spectrum.size());
    for (const auto& g : spectrum) {
        double weight = g.chi_gamma / g.power * g.length * g.c_gamma * g.character(n, p);
        terms.push_back(weight * std::exp(-t * beta - g.length * g.length / (4.0 * t)));
    }
    const double norm = 1.0 / std::sqrt(4.0 * kPi * t);
    out.value = norm * pairwise_sum(terms);
    const double longest = spectrum.back().length;
    out.remainder_bound = norm * std::exp(-t * beta - longest * longest / (4.0 * t));
    return out;
}

HeatTraceBreakdown hodge_trace(const ManifoldData& manifold, int p, double t) {
    if (p < 0 || p > manifold.dimension() - 1)
        throw std::invalid_argument("hodge_trace: p must lie in [0, n-1]");
    HeatTraceBreakdown out;
    out.t = t;
    out.identity_part = identity_heat_term(manifold, p, t) + identity_heat_term(manifold, p - 1, t);
    auto upper = hyperbolic_heat_term(manifold, p, t);
    auto lower = hyperbolic_heat_term(manifold, p - 1, t);
    out.hyperbolic_part = upper.value + lower.value;
    out.hyperbolic_remainder_bound = upper.remainder_bound + lower.remainder_bound;
    out.empty_spectrum = upper.empty_spectrum;
    out.total = out.identity_part + out.hyperbolic_part;
    return out;
}

HeatTraceBreakdown coexact_trace(const ManifoldData& manifold, int p, double t) {
    if (p < 0 || p > manifold.dimension() - 1)
        throw std::invalid_argument("coexact_trace: p must lie in [0, n-1]");
    if (!manifold.has_betti()) throw std::invalid_argument("coexact_trace: missing Betti numbers");
    HeatTraceBreakdown out;
    out.t = t;
    for (int j = 0; j <= p; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        auto sector = hodge_trace(manifold, p - j, t);
        out.identity_part += sign * sector.identity_part;
        out.hyperbolic_part += sign * sector.hyperbolic_part;
        out.hyperbolic_remainder_bound += sector.hyperbolic_remainder_bound;
        out.betti_part += sign * static_cast<double>(manifold.betti()[static_cast<std::size_t>(p - j)]);
        out.empty_spectrum = sector.empty_spectrum;
    }
    out.total = out.identity_part + out.hyperbolic_part - out.betti_part;
    return out;
}

// ---------------------------------------------------------------------------

double mellin_hyperbolic(const ManifoldData& manifold, int p, double s) {
    check_form_index(manifold, p, "mellin_hyperbolic");
    if (!std::isfinite(s)) throw std::invalid_argument("mellin_hyperbolic: s must be finite");
    if (p == -1) return 0.0;
    const int n = manifold.dimension();
    const double root_beta = std::sqrt(p + manifold.rho0_squared());
    const double order = 0.5 - s;
    std::vector<double> terms;
    for (const auto& g : manifold.geodesics()) {
        double weight = g.chi_gamma / (std::sqrt(kPi) * g.power) * g.length * g.c_gamma * g.character(n, p);
        terms.push_back(weight * std::pow(2.0 * root_beta / g.length, order) * bessel_k(order, g.length * root_beta));
    }
    return pairwise_sum(terms);
}

double mellin_hyperbolic_quadrature(const ManifoldData& manifold, int p, double s) {
    check_form_index(manifold, p, "mellin_hyperbolic_quadrature");
    if (p == -1 || manifold.geodesics().empty()) return 0.0;
    const double root_beta = std::sqrt(p + manifold.rho0_squared());
    auto integrand = [&](double t) { return std::pow(t, s - 1.0) * hyperbolic_heat_term(manifold, p, t).value; };
    const double center = manifold.geodesics().front().length / (2.0 * root_beta);
    return integrate_half_line_or_throw<double>(integrand, center, 1e-13, "mellin_hyperbolic_quadrature", 12);
}

double hyperbolic_zeta(const ManifoldData& manifold, int p, double s) {
    if (s == 0.0) return 0.0;
    return mellin_hyperbolic(manifold, p, s) / std::tgamma(s);
}

double identity_zeta_scale(const ManifoldData& manifold) {
    const int n = manifold.dimension();
    Rational gamma = half_gamma(n);
    Rational denom = pow(Rational(2), 2L * (n - 1)) * gamma * gamma;
    return manifold.chi_one() * manifold.volume() / denom.to_double();
}

double identity_zeta(const ManifoldData& manifold, int p, double s) {
    check_form_index(manifold, p, "identity_zeta");
    if (!std::isfinite(s) || s < 0) throw std::invalid_argument("identity_zeta: s must be finite and >= 0");
    if (p == -1) return 0.0;
    const int n = manifold.dimension();
    const int k = manifold.rank();
    if (s == std::floor(s) && s >= 1 && s <= k)
        throw std::domain_error("identity_zeta: pole at s = " + std::to_string(static_cast<int>(s)));

    const auto a = miatello_coefficients(k, p);
    const double beta = p + manifold.rho0_squared();
    const double pref = identity_zeta_scale(manifold) * binomial(n - 1, p).to_double();

    double sum = 0.0;
    for (int ell = 0; ell < k; ++ell) {
        // l! Gamma(s-l-1)/Gamma(s) beta^{l+1-s}, the Gamma ratio as a finite product.
        double ratio = 1.0;
        for (int i = 1; i <= ell + 1; ++i) ratio *= (s - i);
        double leading = std::tgamma(ell + 1.0) * std::pow(beta, ell + 1.0 - s) / ratio;

        auto moment = [&](double r) { return std::pow(r, 2 * ell + 1) * std::pow(beta + r * r, -s) * fermi(r); };
        double fermi_part = 4.0 * integrate_half_line_or_throw<double>(moment, (2.0 * ell + 1.0) / (2.0 * kPi), 1e-13,
                                                                       "identity_zeta", 12);
        sum += a[static_cast<std::size_t>(ell)].to_double() * (leading - fermi_part);
    }
    return pref * sum;
}

double coexact_identity_zeta(const ManifoldData& manifold, int p, double s) {
    if (p < 0 || p > manifold.dimension() - 1)
        throw std::invalid_argument("coexact_identity_zeta: p must lie in [0, n-1]");
    double total = 0.0;
    for (int j = 0; j <= p; ++j) {
        double sector = identity_zeta(manifold, p - j, s) + identity_zeta(manifold, p - j - 1, s);
        total += (j % 2 == 0) ? sector : -sector;
    }
    return total;
}

}  // namespace hyperzeta
