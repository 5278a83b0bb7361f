#include "hyperzeta/pi_value.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <cstdio>

#include <mpfr.h>

namespace hyperzeta {

namespace {

// ~100 decimal digits; comfortably more than the 50 digits of pi required.
constexpr mpfr_prec_t kRenderBits = 340;

class MpfrScope {
public:
    MpfrScope() { mpfr_init2(value, kRenderBits); }
    ~MpfrScope() { mpfr_clear(value); }
    MpfrScope(const MpfrScope&) = delete;
    MpfrScope& operator=(const MpfrScope&) = delete;
    mpfr_t value;
};

void evaluate(const PiValue& v, mpfr_t out) {
    MpfrScope pi_power;
    mpfr_const_pi(pi_power.value, MPFR_RNDN);
    mpfr_pow_ui(pi_power.value, pi_power.value, v.pi_exponent(), MPFR_RNDN);
    mpfr_set_q(out, v.coefficient().mpq().get_mpq_t(), MPFR_RNDN);
    mpfr_div(out, out, pi_power.value, MPFR_RNDN);
}

}  // namespace

PiValue::PiValue(Rational coefficient, unsigned pi_exponent)
    : coefficient_(std::move(coefficient)), pi_exponent_(pi_exponent) {
    if (coefficient_.is_zero()) pi_exponent_ = 0;
}

PiValue& PiValue::operator+=(const PiValue& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (pi_exponent_ != rhs.pi_exponent_)
        throw std::domain_error("PiValue addition across different pi exponents (" +
                                std::to_string(pi_exponent_) + " vs " +
                                std::to_string(rhs.pi_exponent_) + ")");
    coefficient_ += rhs.coefficient_;
    if (coefficient_.is_zero()) pi_exponent_ = 0;
    return *this;
}

std::string PiValue::to_string() const {
    if (pi_exponent_ == 0) return coefficient_.to_string();
    return coefficient_.to_string() + " * pi^-" + std::to_string(pi_exponent_);
}

PiValue PiValue::parse(std::string_view text) {
    auto star = text.find('*');
    if (star == std::string_view::npos) return PiValue(Rational::parse(text), 0);
    Rational coefficient = Rational::parse(text.substr(0, star));
    std::string_view rest = text.substr(star + 1);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
    constexpr std::string_view prefix = "pi^-";
    if (rest.substr(0, prefix.size()) != prefix || rest.size() == prefix.size())
        throw std::invalid_argument("malformed pi value: '" + std::string(text) + "'");
    std::string_view digits = rest.substr(prefix.size());
    unsigned exponent = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || exponent > 100000)
            throw std::invalid_argument("malformed pi value: '" + std::string(text) + "'");
        exponent = exponent * 10 + static_cast<unsigned>(c - '0');
    }
    return PiValue(std::move(coefficient), exponent);
}

std::string PiValue::to_decimal(int significant_digits) const {
    if (significant_digits < 1) throw std::invalid_argument("significant digits must be >= 1");
    MpfrScope x;
    evaluate(*this, x.value);
    int needed = mpfr_snprintf(nullptr, 0, "%.*RNg", significant_digits, x.value);
    std::vector<char> buf(static_cast<std::size_t>(needed) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*RNg", significant_digits, x.value);
    return std::string(buf.data());
}

double PiValue::to_double() const {
    MpfrScope x;
    evaluate(*this, x.value);
    return mpfr_get_d(x.value, MPFR_RNDN);
}

std::ostream& operator<<(std::ostream& os, const PiValue& value) { return os << value.to_string(); }

}  // namespace hyperzeta
