#pragma once

#include "hyperzeta/rational.hpp"

namespace hyperzeta {

/// Signed (j, l) term of the identity-sector zeta value at s = 0, without
/// the global 1/((4 pi)^{n/2} Gamma(n/2) R^n) prefactor:
///
///   (-1)^j (-1)^{l+1}/(l+1) C(n-1, p-j)
///     * [ a_{2l}^{(p-j)}   (c_l + (alpha-j)^{l+1})
///       + a_{2l}^{(p-j-1)} (p-j)/(n-p) (c_l + (alpha-j-1)^{l+1}) ]
///
/// with c_l = (1 - 2^{-2l-1}) B_{2l+2}. Requires n even >= 2, 0 <= j <= p < n/2
/// and 0 <= l < n/2; violations throw std::invalid_argument.
Rational identity_zeta_term(int n, int p, int j, int ell, const Rational& alpha);

/// Sum over l of identity_zeta_term for one j: the j-th sector's exact
/// contribution to zeta(0), sign (-1)^j included.
Rational zeta_identity_at_zero(int n, int p, int j, const Rational& alpha);

/// (1 - 2^{-2l-1}) B_{2l+2}, the s = 0 Bernoulli constant of the l-th moment.
Rational tanh_moment_constant(int ell);

}  // namespace hyperzeta
