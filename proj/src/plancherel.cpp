#include "hyperzeta/plancherel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "hyperzeta/combinatorics.hpp"

namespace hyperzeta {

namespace {

void check_indices(int k, int p) {
    if (k < 1) throw std::invalid_argument("plancherel: rank k must be >= 1");
    if (p < 0 || p > 2 * k - 1)
        throw std::invalid_argument("plancherel: form index p=" + std::to_string(p) +
                                    " outside [0, " + std::to_string(2 * k - 1) + "]");
}

// (half_odd / 2)^2 for the shift k - l + 3/2 or k - l + 1/2 written as an odd
// multiple of 1/2.
Rational half_square(long twice_shift) { return Rational(twice_shift * twice_shift, 4); }

}  // namespace

EvenPolynomial::EvenPolynomial(std::vector<Rational> coefficients, int rank)
    : coefficients_(std::move(coefficients)), rank_(rank) {
    if (coefficients_.empty()) throw std::invalid_argument("EvenPolynomial needs at least one coefficient");
}

Rational EvenPolynomial::evaluate_at_square(const Rational& r_squared) const {
    Rational acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * r_squared + *it;
    return acc;
}

Rational EvenPolynomial::evaluate(const Rational& r) const { return evaluate_at_square(r * r); }

double EvenPolynomial::evaluate(double r) const {
    double r2 = r * r;
    double acc = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * r2 + it->to_double();
    return acc;
}

std::string EvenPolynomial::to_string() const {
    std::string out;
    for (std::size_t i = coefficients_.size(); i-- > 0;) {
        const Rational& c = coefficients_[i];
        if (c.is_zero() && coefficients_.size() > 1) continue;
        std::string mag = abs(c).to_string();
        if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) out += "-";
        std::string power = i == 0 ? "" : (i == 1 ? "r^2" : "r^" + std::to_string(2 * i));
        if (i == 0) out += mag;
        else if (mag == "1") out += power;
        else out += mag + " " + power;
    }
    return out.empty() ? "0" : out;
}

EvenPolynomial plancherel_polynomial(int k, int p) {
    check_indices(k, p);
    if (p >= k) p = 2 * k - 1 - p;

    std::vector<Rational> roots;  // the positive squares c in (r^2 + c)
    for (int l = 2; l <= p + 1; ++l) roots.push_back(half_square(2L * (k - l) + 3));
    for (int l = p + 2; l <= k; ++l) roots.push_back(half_square(2L * (k - l) + 1));

    std::vector<Rational> coeffs{Rational(1)};
    for (const Rational& c : roots) {
        std::vector<Rational> next(coeffs.size() + 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += coeffs[i] * c;
            next[i + 1] += coeffs[i];
        }
        coeffs = std::move(next);
    }
    return EvenPolynomial(std::move(coeffs), k);
}

std::vector<Rational> miatello_coefficients(int k, int p) {
    if (k < 1) throw std::invalid_argument("miatello_coefficients: rank k must be >= 1");
    if (p == -1) return std::vector<Rational>(static_cast<std::size_t>(k));
    return plancherel_polynomial(k, p).coefficients();
}

double plancherel_prefactor(int k, int p) {
    check_indices(k, p);
    Rational gamma_k = factorial(k - 1);
    Rational denom = pow(Rational(2), 4L * k - 4) * gamma_k * gamma_k;
    return std::numbers::pi * (binomial(2L * k - 1, p) / denom).to_double();
}

double tanh_pi(double r) {
    double x = std::numbers::pi * r;
    if (std::fabs(x) < 1.0) return std::tanh(x);
    double t = 1.0 - 2.0 / (1.0 + std::exp(2.0 * std::fabs(x)));
    return r < 0 ? -t : t;
}

double plancherel_density(int k, int p, double r) {
    check_indices(k, p);
    if (!std::isfinite(r)) throw std::invalid_argument("plancherel_density: r must be finite");
    return plancherel_prefactor(k, p) * r * plancherel_polynomial(k, p).evaluate(r) * tanh_pi(r);
}

}  // namespace hyperzeta
