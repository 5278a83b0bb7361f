#include "hyperzeta/anomaly.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/plancherel.hpp"
#include "hyperzeta/zeta_exact.hpp"

namespace hyperzeta {

namespace {

void require_even_dimension(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("dimension must be even and >= 2 (odd dimensions are out of scope), got n=" +
                                    std::to_string(n));
}

Rational rho0_squared(int n) { return Rational((n - 1) * (n - 1), 4); }

PiValue global_prefactor(int n, const Rational& radius) {
    const int k = n / 2;
    Rational denom = pow(Rational(4), k) * half_gamma(n) * pow(radius, n);
    return PiValue(Rational(1) / denom, static_cast<unsigned>(k));
}

void attach_zeta(AnomalyResult& result, const AnomalySpec& spec) {
    if (spec.volume)
        result.zeta_zero = result.value * (*spec.volume * pow(spec.radius, spec.dimension) * spec.chi_one);
}

}  // namespace

Rational alpha_default(int n, int p) {
    require_even_dimension(n);
    return Rational(p) + rho0_squared(n);
}

Rational alpha_conformal_scalar(int n) {
    require_even_dimension(n);
    // R^2 R(x) = -n(n-1); the radius cancels.
    Rational curvature_r2(-static_cast<long>(n) * (n - 1));
    Rational alpha = rho0_squared(n) + Rational(n - 2) * curvature_r2 / Rational(4L * (n - 1));
    if (alpha != Rational(1, 4)) throw std::logic_error("conformal scalar alpha did not reduce to 1/4");
    return alpha;
}

Rational alpha_massive_scalar(int n, const Rational& mass_sq_r_sq) {
    require_even_dimension(n);
    if (mass_sq_r_sq.sign() < 0) throw std::invalid_argument("mass squared must be nonnegative");
    return rho0_squared(n) + mass_sq_r_sq;
}

std::string to_string(AlphaPolicy policy) {
    switch (policy) {
        case AlphaPolicy::standard: return "default";
        case AlphaPolicy::conformal_scalar: return "conformal-scalar";
        case AlphaPolicy::massive_scalar: return "massive";
        case AlphaPolicy::custom: return "custom";
    }
    return "unknown";
}

AnomalySpec AnomalySpec::standard(int n, int p) {
    AnomalySpec spec;
    spec.dimension = n;
    spec.form_order = p;
    spec.alpha = alpha_default(n, p);
    spec.policy = AlphaPolicy::standard;
    return spec;
}

AnomalySpec AnomalySpec::conformal_scalar(int n) {
    AnomalySpec spec;
    spec.dimension = n;
    spec.form_order = 0;
    spec.alpha = alpha_conformal_scalar(n);
    spec.policy = AlphaPolicy::conformal_scalar;
    return spec;
}

AnomalySpec AnomalySpec::massive_scalar(int n, const Rational& mass_sq_r_sq) {
    AnomalySpec spec;
    spec.dimension = n;
    spec.form_order = 0;
    spec.alpha = alpha_massive_scalar(n, mass_sq_r_sq);
    spec.policy = AlphaPolicy::massive_scalar;
    return spec;
}

void AnomalySpec::validate() const {
    require_even_dimension(dimension);
    if (form_order < 0) throw std::invalid_argument("form order must be nonnegative");
    if (2 * form_order >= dimension)
        throw std::invalid_argument("form order must be < n/2 (middle degree and above excluded), got p=" +
                                    std::to_string(form_order) + " for n=" + std::to_string(dimension));
    if ((policy == AlphaPolicy::conformal_scalar || policy == AlphaPolicy::massive_scalar) && form_order != 0)
        throw std::invalid_argument("alpha policy '" + to_string(policy) + "' applies to scalars (p = 0) only");
    if (radius.sign() <= 0) throw std::invalid_argument("radius must be positive");
    if (volume && volume->sign() <= 0) throw std::invalid_argument("volume must be positive");
}

AnomalyResult conformal_anomaly(const AnomalySpec& spec) {
    spec.validate();
    const int n = spec.dimension;
    const int p = spec.form_order;

    AnomalyResult result;
    result.prefactor = global_prefactor(n, spec.radius);
    Rational total;
    for (int j = 0; j <= p; ++j) {
        for (int ell = 0; ell < n / 2; ++ell) {
            Rational term = identity_zeta_term(n, p, j, ell, spec.alpha);
            total += term;
            result.breakdown.push_back({j, ell, std::move(term)});
        }
    }
    result.value = result.prefactor * total;
    attach_zeta(result, spec);
    return result;
}

AnomalyResult conformal_scalar_anomaly(int n) {
    require_even_dimension(n);
    if (n > 40) throw std::invalid_argument("conformal_scalar_anomaly supports 2 <= n <= 40");
    const int k = n / 2;
    const auto a = miatello_coefficients(k, 0);

    AnomalyResult result;
    result.prefactor = global_prefactor(n, Rational(1));
    Rational total;
    for (int ell = 0; ell < k; ++ell) {
        Rational bracket = pow(Rational(2), -(2L * ell + 2)) + tanh_moment_constant(ell);
        Rational term = Rational(ell % 2 == 0 ? -1 : 1, ell + 1) * a[ell] * bracket;
        total += term;
        result.breakdown.push_back({0, ell, std::move(term)});
    }
    result.value = result.prefactor * total;
    return result;
}

AnomalyTable generate_table(TableKind kind, std::vector<int> dims, std::vector<int> forms) {
    AnomalyTable table{kind, std::move(dims), std::move(forms), {}};
    switch (kind) {
        case TableKind::pform_table:
            if (table.dims.empty()) table.dims = {2, 4, 6, 8, 10};
            if (table.forms.empty()) table.forms = {0, 1, 2, 3, 4};
            break;
        case TableKind::scalar_table:
            if (table.dims.empty()) table.dims = {2, 4, 6, 8, 10, 12, 14};
            table.forms = {0};
            break;
        case TableKind::custom:
            if (table.dims.empty() || table.forms.empty())
                throw std::invalid_argument("custom table needs explicit dims and forms");
            break;
    }

    std::vector<std::future<TableCell>> pending;
    for (int n : table.dims) {
        for (int p : table.forms) {
            pending.push_back(std::async(std::launch::async, [kind, n, p]() -> TableCell {
                TableCell cell{n, p, std::nullopt, {}};
                if (n < 2 || n % 2 != 0) {
                    cell.excluded_reason = "odd or invalid dimension";
                } else if (p < 0 || 2 * p >= n) {
                    cell.excluded_reason = "p >= n/2";
                } else if (kind == TableKind::scalar_table) {
                    cell.result = conformal_scalar_anomaly(n);
                } else {
                    cell.result = conformal_anomaly(AnomalySpec::standard(n, p));
                }
                return cell;
            }));
        }
    }
    for (auto& f : pending) table.cells.push_back(f.get());
    return table;
}

}  // namespace hyperzeta
