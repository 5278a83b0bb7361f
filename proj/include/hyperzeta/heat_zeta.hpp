#pragma once

#include <limits>

#include "hyperzeta/manifold.hpp"
#include "hyperzeta/wide_real.hpp"
#include "hyperzeta/zeta_exact.hpp"

namespace hyperzeta {

// --- identity orbital integral ----------------------------------------------

/// I^{(p)}(t) = chi(1) Vol/(4 pi) \int_R mu_{sigma_p}(r) e^{-t(r^2 + p + rho0^2)} dr
/// by double-exponential quadrature over [0, inf) (the integrand is even).
/// p = -1 returns 0. Throws ConvergenceError with the achieved estimate.
double identity_heat_term(const ManifoldData& manifold, int p, double t);

// --- tanh moments and their Bernoulli series ----------------------------------

inline constexpr int kOptimalTruncation = std::numeric_limits<int>::max();

template <class Real>
struct TanhMomentSeries {
    Real value{};
    /// |term| of the first term left out; bounds the truncation error.
    Real first_omitted{};
    /// Index k of the last included Bernoulli term (-1: leading term only).
    int last_index = -1;
    /// Index of the smallest-magnitude term, or -1 if it lies beyond the
    /// search cap (very small t).
    int optimal_index = -1;
    /// True when the requested order was clamped to the optimal truncation.
    bool clamped = false;
};

/// \int_R r^{2l+1} e^{-t r^2} tanh(pi r) dr
///   ~ l! t^{-l-1} - sum_k (-1)^l (1 - 2^{-2l-2k-1}) t^k / (k! (l+k+1)) B_{2(l+k+1)}
/// summed through k = order, or through the index just below the smallest
/// term when `order` would run past it. The series diverges for every t > 0.
/// Terms are formed from exact Bernoulli numbers in 160-digit arithmetic.
TanhMomentSeries<WideReal> tanh_moment_series_wide(int ell, const WideReal& t, int order = kOptimalTruncation);
TanhMomentSeries<double> tanh_moment_series(int ell, double t, int order = kOptimalTruncation);

/// Direct double-exponential quadrature of the same integral.
WideReal tanh_moment_quadrature_wide(int ell, const WideReal& t);
double tanh_moment_quadrature(int ell, double t);

// --- hyperbolic orbital integral ----------------------------------------------

struct HyperbolicSum {
    double value = 0.0;
    /// (4 pi t)^{-1/2} e^{-t(rho0^2+p)} e^{-t_max^2/(4t)} from the longest
    /// included length: the Gaussian scale of the omitted tail.
    double remainder_bound = 0.0;
    bool empty_spectrum = false;
};

/// H^{(p)}(t) = (4 pi t)^{-1/2} sum_gamma chi(gamma)/j(gamma) t_gamma C(gamma)
///              chi_{sigma_p}(m_gamma) exp{-t(rho0^2 + p) - t_gamma^2/(4t)}.
/// Pairwise summation in spectrum order. p = -1 returns 0.
HyperbolicSum hyperbolic_heat_term(const ManifoldData& manifold, int p, double t);

// --- assembled traces -------------------------------------------------------

struct HeatTraceBreakdown {
    double t = 0.0;
    double identity_part = 0.0;
    double hyperbolic_part = 0.0;
    double betti_part = 0.0;  ///< subtracted; 0 for the full Hodge trace
    double total = 0.0;       ///< identity_part + hyperbolic_part - betti_part
    double hyperbolic_remainder_bound = 0.0;
    bool empty_spectrum = false;
};

/// Tr e^{-t L_p} = I^{(p)} + I^{(p-1)} + H^{(p)} + H^{(p-1)}, 0 <= p <= n-1.
HeatTraceBreakdown hodge_trace(const ManifoldData& manifold, int p, double t);

/// Trace over co-exact p-forms:
///   sum_{j=0}^{p} (-1)^j [I^{(p-j)} + I^{(p-j-1)} + H^{(p-j)} + H^{(p-j-1)} - b_{p-j}].
/// Throws std::invalid_argument when the manifold carries no Betti numbers.
HeatTraceBreakdown coexact_trace(const ManifoldData& manifold, int p, double t);

// --- Mellin transforms and zeta values -----------------------------------------

/// \int_0^inf t^{s-1} H^{(p)}(t) dt in closed form,
///   sum_gamma chi(gamma)/(sqrt(pi) j) t_gamma C(gamma) chi_{sigma_p}(m_gamma)
///             (2 sqrt(beta)/t_gamma)^{-s+1/2} K_{-s+1/2}(t_gamma sqrt(beta)),
/// beta = p + rho0^2 in both slots (for a shifted sector q = p - j this is
/// alpha - j).
double mellin_hyperbolic(const ManifoldData& manifold, int p, double s);

/// Same transform by direct quadrature over t of hyperbolic_heat_term.
double mellin_hyperbolic_quadrature(const ManifoldData& manifold, int p, double s);

/// mellin_hyperbolic(s) / Gamma(s): the hyperbolic contribution to zeta(s).
double hyperbolic_zeta(const ManifoldData& manifold, int p, double s);

/// (1/Gamma(s)) \int_0^inf t^{s-1} I^{(p)}(t) dt, analytically continued to
/// s >= 0 (poles at s = 1..n/2 excepted):
///   pref * sum_l a_l [ l! beta^{l+1-s} / prod_{i=1}^{l+1} (s - i)
///                      - 4 \int_0^inf r^{2l+1} (beta + r^2)^{-s} / (1 + e^{2 pi r}) dr ]
/// with pref = chi(1) Vol C(n-1, p) / (2^{2(n-1)} Gamma(n/2)^2), beta = p + rho0^2.
/// Finite at s = 0.
double identity_zeta(const ManifoldData& manifold, int p, double s);

/// Co-exact identity sector: sum_j (-1)^j [identity_zeta(p-j) + identity_zeta(p-j-1)].
double coexact_identity_zeta(const ManifoldData& manifold, int p, double s);

/// chi(1) Vol / (2^{2(n-1)} Gamma(n/2)^2), the scale between identity_zeta at
/// s = 0 and the exact per-sector terms.
double identity_zeta_scale(const ManifoldData& manifold);

}  // namespace hyperzeta
