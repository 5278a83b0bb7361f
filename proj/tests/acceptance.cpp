// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hyperzeta/anomaly.hpp"
#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/golden.hpp"
#include "hyperzeta/heat_zeta.hpp"
#include "hyperzeta/manifold.hpp"
#include "hyperzeta/pi_value.hpp"
#include "hyperzeta/plancherel.hpp"

using namespace hyperzeta;

namespace {

struct Frozen {
    int n;
    int p;
    const char* exact;
    const char* numerical;
};

const Frozen kTable2[] = {
    {2, 0, "-1/12 * pi^-1", "-0.0265258"},
    {4, 0, "29/240 * pi^-2", "0.012243"},
    {4, 1, "-67/160 * pi^-2", "-0.0424282"},
    {6, 0, "-1139/4032 * pi^-3", "-0.00911074"},
    {6, 1, "2539/2016 * pi^-3", "0.0406184"},
    {6, 2, "-2005/1792 * pi^-3", "-0.036085"},
    {8, 0, "32377/34560 * pi^-4", "0.00961753"},
    {8, 1, "-1368853/276480 * pi^-4", "-0.0508269"},
    {8, 2, "101665/41472 * pi^-4", "0.0251662"},
    {8, 3, "118459/34560 * pi^-4", "0.035188"},
    {10, 0, "-2046263/506880 * pi^-5", "-0.0131919"},
    {10, 1, "16454263/675840 * pi^-5", "0.0795582"},
    {10, 2, "-2475365/811008 * pi^-5", "-0.00997389"},
    {10, 3, "-34196177/7096320 * pi^-5", "-0.0157469"},
    {10, 4, "-14020681/135168 * pi^-5", "-0.338958"},
};

const Frozen kTable1[] = {
    {2, 0, "-1/12 * pi^-1", "-0.0265258"},
    {4, 0, "-1/240 * pi^-2", "-4.22172e-4"},
    {6, 0, "-5/4032 * pi^-3", "-3.99945e-5"},
    {8, 0, "-23/34560 * pi^-4", "-6.83210e-6"},
    {10, 0, "-263/506880 * pi^-5", "-1.69551e-6"},
    {12, 0, "-133787/251596800 * pi^-6", "-5.53107e-7"},
    {14, 0, "-157009/232243200 * pi^-7", "-2.23837e-7"},
};

// \int_R r^{2l+1} e^{-t r^2} tanh(pi r) dr to 100 significant digits, from two
// independent arbitrary-precision quadrature rules that agree to 1e-126.
struct MomentOracle {
    int ell;
    const char* t;
    const char* value;
};

const MomentOracle kMoments[] = {
    {0, "0.05", "19.91738639114134764506252601424225899576948499442691576234108041860996697727717387752076394677914831"},
    {0, "0.1", "9.918087875868369650392103044448756492850686357066739232629543421521447449528272139569474530933691596"},
    {0, "0.2", "4.919439679221782383543725243946542415456002124689527469370571592693154564288039186841518157971315045"},
    {1, "0.05", "399.9857910604585997818487226266801630722092407278409785104023405809689296479465816815002285311772708"},
    {1, "0.1", "99.98614653212549482339818721310574641566875371599554950300047177923687713568080004500522829307361375"},
    {1, "0.2", "24.98680673043714464076234427238669096178032146369811227600642538160351081113593129053184166147089907"},
    {2, "0.05", "15999.99270685421551384951908454104204495249810041615081710346302524185484102567046806373907840245311"},
    {2, "0.1", "1999.993069120699468091913322443749072192479188646628505357341962750467763187024336954122461501159452"},
    {2, "0.2", "249.993709753091730328572361640873745167716820651847689091949669233950106624667739949900016905854602"},
    {3, "0.05", "959999.9924384164879291359465112378022969842885204148916776492827946213348709878043681502492441325051"},
    {3, "0.1", "59999.99305766390301734310340315910648603593632225964134086716527897821820457313009221078340972291863"},
    {3, "0.2", "3749.99408862140054487854746570886494884578673877911556112706329764772272239580048623279453281032657"},
};

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const char* id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && elapsed >= limit_seconds) {
        o.ok = false;
        std::ostringstream os;
        os << " runtime " << elapsed << " s exceeds " << limit_seconds << " s;";
        o.detail += os.str();
    }
    if (!o.ok) ++failures;
    std::printf("[%s] %s %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, elapsed, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
}

Outcome golden(const Frozen* begin, const Frozen* end, const std::function<PiValue(int, int)>& compute) {
    Outcome o;
    std::ostringstream bad;
    for (const Frozen* f = begin; f != end; ++f) {
        PiValue v = compute(f->n, f->p);
        if (v != PiValue::parse(f->exact)) bad << " n=" << f->n << " p=" << f->p << " exact " << v;
        else if (!agrees_to_digits(v, f->numerical, 6)) bad << " n=" << f->n << " p=" << f->p << " float " << v.to_decimal(6);
    }
    o.detail = bad.str();
    o.ok = o.detail.empty();
    if (o.ok) o.detail = std::to_string(end - begin) + " values exact, floats within one unit of the 6th digit";
    return o;
}

ManifoldData synthetic(std::uint64_t seed, int n) {
    std::vector<long> betti(static_cast<std::size_t>(n) + 1, 0);
    betti.front() = betti.back() = 1;
    return ManifoldData::create(n, 4.0 * std::numbers::pi, betti, synth_spectrum(seed, 5, 2.0, 2, n));
}

}  // namespace

int main() {
    report("AC1", "table 2 golden reproduction", 1.0, [] {
        return golden(std::begin(kTable2), std::end(kTable2),
                      [](int n, int p) { return conformal_anomaly(AnomalySpec::standard(n, p)).value; });
    });

    report("AC2", "table 1 golden reproduction", 1.0, [] {
        return golden(std::begin(kTable1), std::end(kTable1),
                      [](int n, int) { return conformal_scalar_anomaly(n).value; });
    });

    report("AC3", "conformal scalar equals p = 0 formula at alpha = 1/4", 0.0, [] {
        Outcome o;
        for (int n = 2; n <= 14; n += 2) {
            AnomalySpec s = AnomalySpec::standard(n, 0);
            s.alpha = Rational(1, 4);
            s.policy = AlphaPolicy::custom;
            if (conformal_anomaly(s).value != conformal_scalar_anomaly(n).value) {
                o.ok = false;
                o.detail += " n=" + std::to_string(n);
            }
        }
        return o;
    });

    const int before_substitutes = failures;
    report("AC4", "tanh-moment series at optimal truncation vs quadrature", 10.0, [] {
        Outcome o;
        std::ostringstream os;
        WideReal worst_ratio = 0;
        for (const auto& m : kMoments) {
            WideReal t(m.t);
            WideReal oracle(m.value);
            auto series = tanh_moment_series_wide(m.ell, t);
            WideReal quad = tanh_moment_quadrature_wide(m.ell, t);
            WideReal e_oracle = abs(series.value - oracle);
            WideReal e_quad = abs(series.value - quad);
            if (series.optimal_index < 0 || e_oracle > series.first_omitted || e_quad > series.first_omitted) {
                o.ok = false;
                os << " l=" << m.ell << " t=" << m.t << " |err|=" << static_cast<double>(e_oracle)
                   << " bound=" << static_cast<double>(series.first_omitted);
            }
            WideReal ratio = e_oracle / series.first_omitted;
            if (ratio > worst_ratio) worst_ratio = ratio;
        }
        if (o.ok) os << "12 cases, worst |error|/first_omitted = " << static_cast<double>(worst_ratio);
        o.detail = os.str();
        return o;
    });

    report("AC5", "Bessel-form Mellin transform vs t-quadrature (1e-8 relative)", 30.0, [] {
        Outcome o;
        std::ostringstream os;
        double worst = 0;
        for (int n : {2, 4, 6})
            for (int p = 0; p < n / 2; ++p)
                for (std::uint64_t seed : {11u, 12u}) {
                    ManifoldData m = synthetic(seed * 1000 + static_cast<std::uint64_t>(n), n);
                    for (double s : {0.3, 0.5, 0.7}) {
                        double bessel = mellin_hyperbolic(m, p, s);
                        double quad = mellin_hyperbolic_quadrature(m, p, s);
                        double rel = std::fabs(bessel - quad) / std::fabs(quad);
                        worst = std::max(worst, rel);
                        if (!(rel <= 1e-8)) {
                            o.ok = false;
                            os << " n=" << n << " p=" << p << " seed=" << seed << " s=" << s << " rel=" << rel;
                        }
                    }
                }
        if (o.ok) os << "54 cases, worst relative difference " << worst;
        o.detail = os.str();
        return o;
    });

    report("AC6", "hyperbolic zeta vanishes linearly as s -> 0", 0.0, [] {
        Outcome o;
        std::ostringstream os;
        for (int n : {2, 4}) {
            ManifoldData m = synthetic(20030709u + static_cast<std::uint64_t>(n), n);
            for (int p = 0; p < n / 2; ++p) {
                double coarse = hyperbolic_zeta(m, p, 1e-2);
                double fine = hyperbolic_zeta(m, p, 1e-3);
                double ratio = coarse / fine;
                double identity = std::fabs(coexact_identity_zeta(m, p, 0.0));
                bool ok = std::fabs(ratio - 10.0) <= 0.2 && std::fabs(coarse) < 1e-2 * identity &&
                          std::fabs(fine) < 1e-2 * identity;
                o.ok = o.ok && ok;
                os << " n=" << n << " p=" << p << " ratio=" << ratio << " |zeta_H(1e-2)|/|zeta_I(0)|="
                   << std::fabs(coarse) / identity;
            }
        }
        o.detail = os.str();
        return o;
    });

    report("AC7", "property suite", 5.0, [] {
        Outcome o;
        std::ostringstream os;
        long checks = 0;
        for (int k = 1; k <= 4; ++k)
            for (int p = 0; p <= 2 * k - 1; ++p, ++checks)
                if (!(plancherel_polynomial(k, p) == plancherel_polynomial(k, 2 * k - 1 - p)))
                    os << " symmetry k=" << k << " p=" << p;
        for (int k = 1; k <= 7; ++k)
            for (int p = 0; p <= 2 * k - 1; ++p) {
                auto a = miatello_coefficients(k, p);
                ++checks;
                if (a.back() != Rational(1)) os << " monic k=" << k << " p=" << p;
                for (const auto& c : a)
                    if (c.sign() <= 0) os << " positive k=" << k << " p=" << p;
            }
        for (unsigned m = 2; m <= 40; ++m, ++checks) {
            int expected = (m % 2 == 1) ? 0 : ((m / 2) % 2 == 1 ? 1 : -1);
            if (bernoulli(m).sign() != expected) os << " bernoulli m=" << m;
        }
        for (long num = -40; num <= 40; ++num)
            for (long den = 1; den <= 40; ++den)
                for (unsigned e = 0; e <= 8; ++e, ++checks) {
                    PiValue v(Rational(num, den), e);
                    if (PiValue::parse(v.to_string()) != v) os << " roundtrip " << v;
                }
        o.detail = os.str();
        o.ok = o.detail.empty();
        if (o.ok) o.detail = std::to_string(checks) + " checks";
        return o;
    });

    const bool substitutes_ok = failures == before_substitutes;
    report("AC8", "scope: synthetic spectra stand in for true length spectra", 0.0, [substitutes_ok] {
        Outcome o;
        o.ok = substitutes_ok;
        o.detail = "arithmetic quotients and their true length spectra are not computed; "
                   "AC4-AC6 exercise every hyperbolic-side formula on seed-fixed synthetic spectra";
        return o;
    });

    std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed" : "acceptance: FAILED");
    return failures == 0 ? 0 : 1;
}
