#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperzeta {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Backed by GMP; no operation ever rounds.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I value) : q_(static_cast<long>(value)) {}

    template <std::unsigned_integral I>
    Rational(I value) : q_(static_cast<unsigned long>(value)) {}

    /// Throws std::domain_error when den == 0.
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& integer);
    explicit Rational(mpq_class q);

    /// Accepts "a", "a/b" and plain decimals such as "-0.25" or "1e-3"
    /// (converted exactly). Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& mpq() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// Nearest double (GMP truncation semantics, good to ~1 ulp).
    double to_double() const { return q_.get_d(); }
    /// "a/b", or "a" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

/// base^exponent by repeated squaring. Negative exponents require base != 0.
Rational pow(const Rational& base, long exponent);

Rational abs(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace hyperzeta
