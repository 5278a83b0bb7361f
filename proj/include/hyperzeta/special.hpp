#pragma once

namespace hyperzeta {

/// Modified Bessel function of the second kind (Macdonald function) K_nu(z)
/// for real order and z > 0, from
///   K_nu(z) = 2^{-nu-1} z^nu \int_0^inf t^{-nu-1} exp(-t - z^2/(4t)) dt
/// by double-exponential quadrature (>= 10 significant digits). Uses
/// K_{-nu} = K_nu, and the finite closed form for half-integer orders.
/// Throws std::domain_error for z <= 0 or non-finite arguments.
double bessel_k(double order, double z);

/// Closed form K_{m+1/2}(z) = sqrt(pi/(2z)) e^{-z} sum_{i=0}^{m} (m+i)! / (i! (m-i)! (2z)^i).
double bessel_k_half_integer(int m, double z);

}  // namespace hyperzeta
