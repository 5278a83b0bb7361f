#include "hyperzeta/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace hyperzeta {

namespace {

// Tangent numbers T_1..T_count (Brent & Harvey's in-place recurrence), all
// integer arithmetic.
std::vector<mpz_class> tangent_numbers(std::size_t count) {
    std::vector<mpz_class> t(count + 1);
    if (count == 0) return t;
    t[1] = 1;
    for (std::size_t k = 2; k <= count; ++k) t[k] = (k - 1) * t[k - 1];
    for (std::size_t k = 2; k <= count; ++k)
        for (std::size_t j = k; j <= count; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    return t;
}

// B_{2i} for i = 0..half_count.
std::vector<Rational> even_bernoulli_table(std::size_t half_count) {
    std::vector<Rational> b;
    b.reserve(half_count + 1);
    b.emplace_back(1);
    auto t = tangent_numbers(half_count);
    for (std::size_t i = 1; i <= half_count; ++i) {
        // B_{2i} = (-1)^{i-1} 2i T_i / (4^i (4^i - 1))
        mpz_class four_pow;
        mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, i);
        mpz_class num = 2 * static_cast<unsigned long>(i) * t[i];
        if (i % 2 == 0) num = -num;
        b.emplace_back(num, mpz_class(four_pow * (four_pow - 1)));
    }
    return b;
}

class BernoulliMemo {
public:
    BernoulliMemo() : even_(even_bernoulli_table(20)) {}

    Rational even(std::size_t half_index) {
        {
            std::shared_lock lock(mutex_);
            if (half_index < even_.size()) return even_[half_index];
        }
        std::unique_lock lock(mutex_);
        if (half_index >= even_.size()) {
            std::size_t target = std::max(half_index, 2 * (even_.size() - 1));
            even_ = even_bernoulli_table(target);
        }
        return even_[half_index];
    }

private:
    std::shared_mutex mutex_;
    std::vector<Rational> even_;
};

BernoulliMemo& memo() {
    static BernoulliMemo instance;
    return instance;
}

}  // namespace

Rational bernoulli(unsigned m) {
    if (m == 1) return Rational(-1, 2);
    if (m % 2 == 1) return Rational(0);
    return memo().even(m / 2);
}

Rational binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return Rational(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(c);
}

Rational factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational half_gamma(long n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("half_gamma: n must be even and >= 2 (odd dimensions are out of scope)");
    return factorial(n / 2 - 1);
}

}  // namespace hyperzeta
