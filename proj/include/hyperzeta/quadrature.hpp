#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include <boost/math/constants/constants.hpp>

namespace hyperzeta {

template <class Real>
struct QuadratureResult {
    Real value{};
    /// |S_h - S_{2h}| at the last level; the true error is typically far smaller.
    Real error_estimate{};
    int levels = 0;
    std::size_t evaluations = 0;
    bool converged = false;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved_error)
        : std::runtime_error(what + " (achieved error estimate " + std::to_string(achieved_error) + ")"),
          achieved_error_(achieved_error) {}
    double achieved_error() const { return achieved_error_; }

private:
    double achieved_error_;
};

namespace detail {

template <class Real>
bool finite(const Real& x) {
    using std::isfinite;
    return isfinite(x);
}

template <class Real>
Real max_half_width() {
    // exp(pi/2 sinh u) must stay representable; doubles overflow past u ~ 6.8.
    if constexpr (std::is_floating_point_v<Real>) return Real(6.5);
    else return Real(8);
}

}  // namespace detail

/// Double-exponential (exp-sinh) quadrature of f over (0, inf):
///   x = center * exp(pi/2 sinh u),  dx = x * pi/2 cosh u du,
/// trapezoidal in u with step halving until two successive levels agree to
/// rel_tol. The u-range is fixed on the coarsest level by walking outward
/// until the weighted integrand is negligible. `center` should sit near the
/// bulk of the integrand; the transform tolerates being off by orders of
/// magnitude.
template <class Real, class F>
QuadratureResult<Real> integrate_half_line(F&& f, Real center, Real rel_tol, int max_levels = 10) {
    using std::abs;
    using std::cosh;
    using std::exp;
    using std::sinh;
    const Real half_pi = boost::math::constants::half_pi<Real>();
    const Real h0 = Real(1) / 2;
    const Real u_cap = detail::max_half_width<Real>();
    const Real min_extent = Real(3);
    const Real tail_tol = rel_tol * Real(1e-3);

    QuadratureResult<Real> out;
    auto node = [&](const Real& u) -> Real {
        Real x = center * exp(half_pi * sinh(u));
        if (!detail::finite(x) || x == 0) return Real(0);
        Real w = x * half_pi * cosh(u);
        Real v = f(x) * w;
        ++out.evaluations;
        return detail::finite(v) ? v : Real(0);
    };

    Real sum = node(Real(0));
    Real lo = 0;
    Real hi = 0;
    for (int dir : {+1, -1}) {
        int quiet = 0;
        Real last = 0;
        for (int k = 1;; ++k) {
            Real u = Real(dir * k) * h0;
            if (abs(u) > u_cap) break;
            last = u;
            Real g = node(u);
            sum += g;
            if (abs(g) <= tail_tol * abs(sum) && abs(u) >= min_extent) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
        }
        if (dir > 0) hi = last;
        else lo = last;
    }

    Real h = h0;
    Real estimate = sum * h;
    for (int level = 1; level <= max_levels; ++level) {
        h /= 2;
        Real fresh = 0;
        for (Real u = lo + h; u < hi; u += 2 * h) fresh += node(u);
        sum += fresh;
        Real next = sum * h;
        out.error_estimate = abs(next - estimate);
        estimate = next;
        out.levels = level;
        if (level >= 2 && out.error_estimate <= rel_tol * abs(estimate)) {
            out.converged = true;
            break;
        }
        if (estimate == 0 && out.error_estimate == 0 && level >= 3) {
            out.converged = true;
            break;
        }
    }
    out.value = estimate;
    return out;
}

/// Same as integrate_half_line but throws ConvergenceError when the target
/// is not reached.
template <class Real, class F>
Real integrate_half_line_or_throw(F&& f, Real center, Real rel_tol, const char* what, int max_levels = 10) {
    auto r = integrate_half_line<Real>(std::forward<F>(f), center, rel_tol, max_levels);
    if (!r.converged)
        throw ConvergenceError(std::string(what) + ": quadrature did not converge",
                               static_cast<double>(r.error_estimate));
    return r.value;
}

}  // namespace hyperzeta
