#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperzeta/pi_value.hpp"
#include "hyperzeta/rational.hpp"

namespace hyperzeta {

/// alpha = p + rho0^2 with rho0 = (n-1)/2.
Rational alpha_default(int n, int p);

/// rho0^2 + (n-2) R^2 R(x) / (4(n-1)) with scalar curvature R(x) = -n(n-1)/R^2.
/// Evaluates to 1/4 in every even dimension.
Rational alpha_conformal_scalar(int n);

/// rho0^2 + m^2 R^2 for a minimally coupled massive scalar.
/// Negative mass_sq_r_sq throws std::invalid_argument.
Rational alpha_massive_scalar(int n, const Rational& mass_sq_r_sq);

enum class AlphaPolicy { standard, conformal_scalar, massive_scalar, custom };

std::string to_string(AlphaPolicy policy);

struct AnomalySpec {
    int dimension = 2;
    int form_order = 0;
    Rational alpha;
    AlphaPolicy policy = AlphaPolicy::standard;
    Rational radius{1};
    /// Vol(Gamma\G); when set, the result carries zeta(0) as well.
    std::optional<Rational> volume;
    /// chi(1) multiplier applied to zeta(0) only.
    Rational chi_one{1};

    static AnomalySpec standard(int n, int p);
    static AnomalySpec conformal_scalar(int n);
    static AnomalySpec massive_scalar(int n, const Rational& mass_sq_r_sq);

    /// Throws std::invalid_argument naming the violated rule.
    void validate() const;
};

struct AnomalyTerm {
    int j;
    int ell;
    Rational value;  ///< signed, before the global prefactor
};

struct AnomalyResult {
    PiValue value;
    /// 1/((4 pi)^{n/2} Gamma(n/2) R^n)
    PiValue prefactor;
    std::optional<PiValue> zeta_zero;
    std::vector<AnomalyTerm> breakdown;
};

/// Trace of the stress tensor for a co-exact p-form, n even, p < n/2:
///
///   1/((4 pi)^{n/2} Gamma(n/2) R^n) * sum_{j=0}^{p} sum_{l=0}^{n/2-1} identity_zeta_term(n,p,j,l,alpha)
///
/// Exact, with pi exponent n/2. zeta_zero = value * volume * R^n * chi_one.
AnomalyResult conformal_anomaly(const AnomalySpec& spec);

/// Conformally coupled scalar, 2 <= n <= 40:
///   prefactor * sum_l (-1)^{l+1}/(l+1) a_{2l} [2^{-2l-2} + (1 - 2^{-2l-1}) B_{2l+2}]
/// Computed from its own closed form rather than through conformal_anomaly.
AnomalyResult conformal_scalar_anomaly(int n);

// --- tables -----------------------------------------------------------------

enum class TableKind { scalar_table, pform_table, custom };

struct TableCell {
    int dimension;
    int form_order;
    std::optional<AnomalyResult> result;
    std::string excluded_reason;  ///< non-empty iff result is empty

    bool excluded() const { return !result.has_value(); }
};

struct AnomalyTable {
    TableKind kind;
    std::vector<int> dims;
    std::vector<int> forms;
    std::vector<TableCell> cells;  ///< row-major over (dims, forms)
};

/// Builds a grid of anomaly values. Defaults: pform_table uses n = 2..10 and
/// p = 0..4 (cells with p >= n/2 become excluded markers, leaving the 15
/// populated entries); scalar_table uses n = 2..14 with p = 0 and the
/// conformal-scalar alpha; custom takes dims/forms verbatim with the default
/// alpha. Cells are evaluated concurrently and returned in grid order.
AnomalyTable generate_table(TableKind kind, std::vector<int> dims = {}, std::vector<int> forms = {});

}  // namespace hyperzeta
