#include "hyperzeta/zeta_exact.hpp"

#include <stdexcept>
#include <string>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/plancherel.hpp"

namespace hyperzeta {

namespace {

void check(int n, int p, int j) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("dimension must be even and >= 2, got " + std::to_string(n));
    if (p < 0 || 2 * p >= n)
        throw std::invalid_argument("form order must satisfy 0 <= p < n/2, got p=" + std::to_string(p));
    if (j < 0 || j > p) throw std::invalid_argument("sector index j must satisfy 0 <= j <= p");
}

}  // namespace

Rational tanh_moment_constant(int ell) {
    if (ell < 0) throw std::invalid_argument("moment index must be nonnegative");
    return (Rational(1) - pow(Rational(2), -(2L * ell + 1))) * bernoulli(static_cast<unsigned>(2 * ell + 2));
}

Rational identity_zeta_term(int n, int p, int j, int ell, const Rational& alpha) {
    check(n, p, j);
    const int k = n / 2;
    if (ell < 0 || ell >= k) throw std::invalid_argument("moment index l must satisfy 0 <= l < n/2");

    const auto upper = miatello_coefficients(k, p - j);
    const auto lower = miatello_coefficients(k, p - j - 1);  // zeros when p-j-1 = -1
    const Rational c = tanh_moment_constant(ell);
    const long power = ell + 1;

    Rational bracket = upper[ell] * (c + pow(alpha - j, power));
    if (!lower[ell].is_zero())
        bracket += lower[ell] * Rational(p - j, n - p) * (c + pow(alpha - j - 1, power));

    Rational sign_l = Rational((ell % 2 == 0) ? -1 : 1, ell + 1);
    Rational term = sign_l * binomial(n - 1, p - j) * bracket;
    return (j % 2 == 0) ? term : -term;
}

Rational zeta_identity_at_zero(int n, int p, int j, const Rational& alpha) {
    check(n, p, j);
    Rational sum;
    for (int ell = 0; ell < n / 2; ++ell) sum += identity_zeta_term(n, p, j, ell, alpha);
    return sum;
}

}  // namespace hyperzeta
