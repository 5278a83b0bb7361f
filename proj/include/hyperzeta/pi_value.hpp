#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hyperzeta/rational.hpp"

namespace hyperzeta {

/// Exact value coefficient * pi^(-pi_exponent).
///
/// A zero coefficient normalizes the exponent to 0, so equality is plain
/// member-wise comparison.
class PiValue {
public:
    PiValue() = default;
    PiValue(Rational coefficient, unsigned pi_exponent);

    const Rational& coefficient() const { return coefficient_; }
    unsigned pi_exponent() const { return pi_exponent_; }
    bool is_zero() const { return coefficient_.is_zero(); }

    /// Addition requires equal pi exponents (zero is accepted as the identity
    /// for any exponent); mismatches throw std::domain_error.
    PiValue& operator+=(const PiValue& rhs);
    friend PiValue operator+(PiValue lhs, const PiValue& rhs) { return lhs += rhs; }

    PiValue operator-() const { return PiValue(-coefficient_, pi_exponent_); }
    friend PiValue operator*(const PiValue& v, const Rational& s) {
        return PiValue(v.coefficient_ * s, v.pi_exponent_);
    }
    friend PiValue operator*(const Rational& s, const PiValue& v) { return v * s; }

    friend bool operator==(const PiValue&, const PiValue&) = default;

    /// Lossless form, e.g. "-67/160 * pi^-2"; exponent 0 prints the bare rational.
    std::string to_string() const;
    /// Inverse of to_string(). Throws std::invalid_argument.
    static PiValue parse(std::string_view text);

    /// Decimal rendering with the given number of significant digits, printf
    /// "%g" style, correctly rounded from a 100-digit evaluation.
    std::string to_decimal(int significant_digits = 6) const;
    double to_double() const;

private:
    Rational coefficient_;
    unsigned pi_exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PiValue& value);

}  // namespace hyperzeta
