#pragma once

#include <string>
#include <vector>

#include "hyperzeta/rational.hpp"

namespace hyperzeta {

/// Even polynomial in r stored by powers of r^2: coefficients()[l] multiplies
/// r^(2l). For a Plancherel polynomial of rank k there are k coefficients,
/// the last one equal to 1.
class EvenPolynomial {
public:
    EvenPolynomial(std::vector<Rational> coefficients, int rank);

    const std::vector<Rational>& coefficients() const { return coefficients_; }
    int rank() const { return rank_; }
    /// Degree in r.
    int degree() const { return 2 * (static_cast<int>(coefficients_.size()) - 1); }

    Rational evaluate(const Rational& r) const;
    Rational evaluate_at_square(const Rational& r_squared) const;
    double evaluate(double r) const;

    /// "r^4 + 5/2 r^2 + 9/16"
    std::string to_string() const;

    friend bool operator==(const EvenPolynomial&, const EvenPolynomial&) = default;

private:
    std::vector<Rational> coefficients_;
    int rank_;
};

/// Harish-Chandra-Plancherel polynomial for SO_1(2k,1) and the p-form
/// representation of SO(2k-1): for p <= k-1 the product
///   prod_{l=2}^{p+1} [r^2 + (k-l+3/2)^2] * prod_{l=p+2}^{k} [r^2 + (k-l+1/2)^2]
/// and for k <= p <= 2k-1 the mirror image p -> 2k-1-p.
/// Throws std::invalid_argument when k < 1 or p is outside [0, 2k-1].
EvenPolynomial plancherel_polynomial(int k, int p);

/// Coefficients a_0, a_2, ..., a_{2(k-1)} of plancherel_polynomial(k, p).
/// p = -1 is accepted and yields k zeros, so the absent sector below p = 0
/// needs no special case in callers.
std::vector<Rational> miatello_coefficients(int k, int p);

/// pi / (2^{4k-4} Gamma(k)^2) * C(2k-1, p), the constant in front of
/// r P(r) tanh(pi r).
double plancherel_prefactor(int k, int p);

/// mu_{sigma_p}(r) = plancherel_prefactor(k,p) * r * P(r) * tanh(pi r).
/// Throws std::invalid_argument on bad indices or non-finite r.
double plancherel_density(int k, int p, double r);

/// tanh(pi r); switches to 1 - 2/(1 + e^{2 pi |r|}) for large |r|.
double tanh_pi(double r);

}  // namespace hyperzeta
