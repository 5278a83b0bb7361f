#include <doctest.h>

#include <random>

#include "hyperzeta/anomaly.hpp"
#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/plancherel.hpp"
#include "hyperzeta/zeta_exact.hpp"

using namespace hyperzeta;

namespace {

PiValue pv(long num, long den, unsigned m) { return PiValue(Rational(num, den), m); }

PiValue anomaly(int n, int p) { return conformal_anomaly(AnomalySpec::standard(n, p)).value; }

}  // namespace

TEST_CASE("alpha policies") {
    CHECK(alpha_default(2, 0) == Rational(1, 4));
    CHECK(alpha_default(4, 1) == Rational(13, 4));
    CHECK(alpha_default(10, 4) == Rational(97, 4));
    for (int n : {2, 6, 14, 40}) CHECK(alpha_conformal_scalar(n) == Rational(1, 4));
    CHECK(alpha_massive_scalar(4, Rational(0)) == Rational(9, 4));
    CHECK(alpha_massive_scalar(4, Rational(1)) == Rational(13, 4));
    CHECK(alpha_massive_scalar(2, Rational(1, 2)) == Rational(3, 4));
    CHECK_THROWS_AS(alpha_massive_scalar(2, Rational(-1)), std::invalid_argument);
    CHECK(to_string(AlphaPolicy::conformal_scalar) == "conformal-scalar");
}

TEST_CASE("spec validation") {
    CHECK_THROWS_WITH_AS(AnomalySpec::standard(4, 2).validate(), doctest::Contains("form order must be < n/2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(AnomalySpec::standard(5, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(AnomalySpec::standard(4, -1).validate(), std::invalid_argument);
    AnomalySpec s = AnomalySpec::standard(4, 0);
    s.radius = Rational(0);
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = AnomalySpec::conformal_scalar(4);
    s.form_order = 1;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    CHECK_THROWS_AS(conformal_anomaly(AnomalySpec::standard(6, 3)), std::invalid_argument);
}

TEST_CASE("conformal anomaly: examples") {
    CHECK(anomaly(2, 0) == pv(-1, 12, 1));
    CHECK(anomaly(4, 1) == pv(-67, 160, 2));
    CHECK(anomaly(6, 2) == pv(-2005, 1792, 3));
    CHECK(anomaly(10, 4) == pv(-14020681, 135168, 5));
    CHECK(anomaly(10, 3) == pv(-34196177, 7096320, 5));
    AnomalySpec conformal = AnomalySpec::conformal_scalar(4);
    CHECK(conformal_anomaly(conformal).value == pv(-1, 240, 2));
}

TEST_CASE("conformal scalar anomaly: examples and specialization") {
    CHECK(conformal_scalar_anomaly(2).value == pv(-1, 12, 1));
    CHECK(conformal_scalar_anomaly(8).value == pv(-23, 34560, 4));
    CHECK(conformal_scalar_anomaly(14).value == pv(-157009, 232243200, 7));
    for (int n = 2; n <= 40; n += 2) {
        AnomalySpec s = AnomalySpec::standard(n, 0);
        s.alpha = Rational(1, 4);
        CHECK(conformal_anomaly(s).value == conformal_scalar_anomaly(n).value);
    }
    CHECK_THROWS_AS(conformal_scalar_anomaly(42), std::invalid_argument);
    CHECK_THROWS_AS(conformal_scalar_anomaly(3), std::invalid_argument);
}

TEST_CASE("conformal anomaly: breakdown re-sums to the value") {
    for (int n = 2; n <= 16; n += 2)
        for (int p = 0; p < n / 2; ++p) {
            AnomalyResult r = conformal_anomaly(AnomalySpec::standard(n, p));
            Rational sum;
            for (const auto& t : r.breakdown) sum += t.value;
            CHECK(r.prefactor * sum == r.value);
            CHECK(r.value.pi_exponent() == static_cast<unsigned>(n / 2));
            CHECK(r.breakdown.size() == static_cast<std::size_t>((p + 1) * (n / 2)));
        }
}

TEST_CASE("conformal anomaly: p = 0 has exactly n/2 nonzero terms, all with j = 0") {
    for (int n = 2; n <= 20; n += 2) {
        AnomalyResult r = conformal_anomaly(AnomalySpec::standard(n, 0));
        int nonzero = 0;
        for (const auto& t : r.breakdown) {
            CHECK(t.j == 0);
            if (!t.value.is_zero()) ++nonzero;
        }
        CHECK(nonzero == n / 2);
    }
}

TEST_CASE("conformal anomaly: radius scaling is exact") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(1, 50), den(1, 17);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + 2 * (trial % 5);
        int p = trial % (n / 2);
        Rational R(num(rng), den(rng));
        AnomalySpec s = AnomalySpec::standard(n, p);
        s.radius = R;
        CHECK(conformal_anomaly(s).value * pow(R, n) == anomaly(n, p));
    }
}

TEST_CASE("conformal anomaly: zeta(0) from volume") {
    AnomalySpec s = AnomalySpec::standard(4, 1);
    s.volume = Rational(3);
    s.radius = Rational(2);
    AnomalyResult r = conformal_anomaly(s);
    REQUIRE(r.zeta_zero.has_value());
    CHECK(*r.zeta_zero == r.value * Rational(3) * Rational(16));
    CHECK(*r.zeta_zero == anomaly(4, 1) * Rational(3));
    CHECK_FALSE(conformal_anomaly(AnomalySpec::standard(4, 1)).zeta_zero.has_value());
}

TEST_CASE("massive scalar reduces to the default at zero mass") {
    for (int n = 2; n <= 12; n += 2)
        CHECK(conformal_anomaly(AnomalySpec::massive_scalar(n, Rational(0))).value == anomaly(n, 0));
    CHECK(conformal_anomaly(AnomalySpec::massive_scalar(4, Rational(1))).value != anomaly(4, 0));
}

TEST_CASE("identity sector at s = 0") {
    CHECK(zeta_identity_at_zero(2, 0, 0, Rational(1, 4)) == Rational(-1, 3));
    CHECK(zeta_identity_at_zero(4, 0, 0, Rational(9, 4)) == Rational(29, 15));
    Rational total = zeta_identity_at_zero(4, 1, 0, alpha_default(4, 1)) + zeta_identity_at_zero(4, 1, 1, alpha_default(4, 1));
    CHECK(total == Rational(-67, 10));
    CHECK(tanh_moment_constant(0) == Rational(1, 12));
    for (int n = 2; n <= 12; n += 2)
        for (int p = 0; p < n / 2; ++p) {
            Rational sum;
            for (int j = 0; j <= p; ++j) sum += zeta_identity_at_zero(n, p, j, alpha_default(n, p));
            CHECK(PiValue(sum / (pow(Rational(4), n / 2) * half_gamma(n)), static_cast<unsigned>(n / 2)) == anomaly(n, p));
        }
    CHECK_THROWS_AS(zeta_identity_at_zero(4, 1, 2, Rational(1)), std::invalid_argument);
}

TEST_CASE("tables: shapes and custom cells") {
    AnomalyTable t2 = generate_table(TableKind::pform_table);
    int populated = 0;
    for (const auto& c : t2.cells) {
        if (c.excluded()) CHECK_FALSE(c.excluded_reason.empty());
        else ++populated;
    }
    CHECK(populated == 15);
    CHECK(t2.cells.size() == 25);
    AnomalyTable t1 = generate_table(TableKind::scalar_table);
    CHECK(t1.cells.size() == 7);
    CHECK(t1.cells.back().result->value == pv(-157009, 232243200, 7));
    AnomalyTable c = generate_table(TableKind::custom, {4}, {0, 1});
    REQUIRE(c.cells.size() == 2);
    CHECK(c.cells[0].result->value == pv(29, 240, 2));
    CHECK(c.cells[1].result->value == pv(-67, 160, 2));
    CHECK_THROWS_AS(generate_table(TableKind::custom, {4}, {}), std::invalid_argument);
    AnomalyTable again = generate_table(TableKind::pform_table);
    for (std::size_t i = 0; i < t2.cells.size(); ++i) {
        CHECK(t2.cells[i].dimension == again.cells[i].dimension);
        CHECK(t2.cells[i].form_order == again.cells[i].form_order);
        if (!t2.cells[i].excluded()) CHECK(t2.cells[i].result->value == again.cells[i].result->value);
    }
}
