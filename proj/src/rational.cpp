#include "hyperzeta/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace hyperzeta {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (!is_integer_literal(s))
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// [sign] digits [. digits] [(e|E) [sign] digits]
Rational parse_decimal(std::string_view s, std::string_view whole) {
    auto bad = [&] {
        return std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    };
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    long scale = 0;
    bool seen_point = false;
    std::size_t i = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) ++scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (digits.empty()) throw bad();
    long exponent = 0;
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') throw bad();
        std::string_view exp_part = s.substr(i + 1);
        if (!is_integer_literal(exp_part) || exp_part.size() > 6) throw bad();
        exponent = std::stol(std::string(exp_part));
    }
    mpz_class mantissa(digits, 10);
    if (negative) mantissa = -mantissa;
    long shift = exponent - scale;
    mpz_class ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0) return Rational(mpz_class(mantissa * ten_power));
    return Rational(mantissa, ten_power);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, 1);
    q_ /= den;
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& integer) : q_(integer) {}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
        mpz_class den = parse_integer(trim(s.substr(slash + 1)), text);
        if (den == 0) throw std::domain_error("rational with zero denominator");
        return Rational(num, den);
    }
    return parse_decimal(s, text);
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw std::domain_error("zero raised to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Rational result(1);
    Rational square = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1u) result *= square;
        e >>= 1;
        if (e != 0) square *= square;
    }
    return result;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

}  // namespace hyperzeta
