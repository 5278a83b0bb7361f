#include "hyperzeta/verification.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <utility>

#include "hyperzeta/anomaly.hpp"
#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/golden.hpp"
#include "hyperzeta/heat_zeta.hpp"
#include "hyperzeta/manifold.hpp"

namespace hyperzeta {

namespace {

using Status = CheckOutcome::Status;

CheckOutcome guarded(std::string name, const std::function<std::string()>& body) {
    CheckOutcome out{std::move(name), Status::pass, {}};
    try {
        out.detail = body();
        if (!out.detail.empty()) out.status = Status::fail;
    } catch (const std::exception& e) {
        out.status = Status::fail;
        out.detail = std::string("exception: ") + e.what();
    }
    return out;
}

std::string compare_golden(const std::vector<GoldenEntry>& golden, const std::string& table_name) {
    std::map<std::pair<int, int>, AnomalyResult> computed;
    TableKind kind = table_name == "table1" ? TableKind::scalar_table : TableKind::pform_table;
    for (auto& cell : generate_table(kind).cells)
        if (!cell.excluded()) computed.emplace(std::pair{cell.dimension, cell.form_order}, *cell.result);

    std::ostringstream problems;
    std::size_t seen = 0;
    for (const auto& entry : golden) {
        if (entry.table != table_name) continue;
        ++seen;
        auto it = computed.find({entry.dimension, entry.form_order});
        std::string cell = "n=" + std::to_string(entry.dimension) + " p=" + std::to_string(entry.form_order);
        if (it == computed.end()) {
            problems << cell << ": not computed; ";
            continue;
        }
        if (it->second.value != entry.exact)
            problems << cell << ": exact " << it->second.value << " != golden " << entry.exact << "; ";
        else if (!agrees_to_digits(it->second.value, entry.numerical, 6))
            problems << cell << ": float " << it->second.value.to_decimal(6) << " != golden " << entry.numerical
                     << "; ";
    }
    if (seen != computed.size())
        problems << "golden has " << seen << " entries, table has " << computed.size() << "; ";
    return problems.str();
}

ManifoldData synthetic_manifold(std::uint64_t seed, int n) {
    std::vector<long> betti(static_cast<std::size_t>(n) + 1, 0);
    betti.front() = betti.back() = 1;
    return ManifoldData::create(n, 4.0 * std::numbers::pi, betti, synth_spectrum(seed, 5, 2.0, 2, n));
}

}  // namespace

std::vector<CheckOutcome> run_verification(const VerifyOptions& options) {
    std::vector<CheckOutcome> out;

    std::vector<GoldenEntry> golden;
    try {
        golden = options.golden_path ? load_golden(*options.golden_path) : builtin_golden();
    } catch (const std::exception& e) {
        out.push_back({"golden file", Status::fail, e.what()});
        return out;
    }

    out.push_back(guarded("golden table 2 (p-forms, exact + 6 digits)", [&] { return compare_golden(golden, "table2"); }));
    out.push_back(guarded("golden table 1 (conformal scalar, exact + 6 digits)",
                          [&] { return compare_golden(golden, "table1"); }));

    out.push_back(guarded("conformal scalar = p-form formula at alpha = 1/4", [] {
        std::ostringstream bad;
        for (int n = 2; n <= 14; n += 2) {
            AnomalySpec spec = AnomalySpec::standard(n, 0);
            spec.alpha = Rational(1, 4);
            spec.policy = AlphaPolicy::custom;
            if (conformal_anomaly(spec).value != conformal_scalar_anomaly(n).value) bad << "n=" << n << " ";
        }
        return bad.str();
    }));

    out.push_back(guarded("Bernoulli sign and zero pattern (m <= 40)", [] {
        std::ostringstream bad;
        for (unsigned m = 2; m <= 40; ++m) {
            int sign = bernoulli(m).sign();
            int expected = (m % 2 == 1) ? 0 : ((m / 2) % 2 == 1 ? 1 : -1);
            if (sign != expected) bad << "B_" << m << " ";
        }
        return bad.str();
    }));

    auto heavy = [&](std::string name, const std::function<std::string()>& body) {
        if (options.fast) out.push_back({std::move(name), Status::skip, "--fast"});
        else out.push_back(guarded(std::move(name), body));
    };

    heavy("tanh-moment series at optimal truncation vs quadrature", [] {
        std::ostringstream bad;
        for (int ell = 0; ell <= 3; ++ell) {
            for (const char* t_text : {"0.05", "0.1", "0.2"}) {
                WideReal t(t_text);
                auto series = tanh_moment_series_wide(ell, t);
                WideReal quad = tanh_moment_quadrature_wide(ell, t);
                if (abs(series.value - quad) > series.first_omitted) bad << "l=" << ell << " t=" << t_text << " ";
            }
        }
        return bad.str();
    });

    heavy("Bessel-form Mellin transform vs t-quadrature (1e-8)", [] {
        std::ostringstream bad;
        for (auto [n, p] : {std::pair{2, 0}, std::pair{4, 1}, std::pair{6, 2}}) {
            ManifoldData m = synthetic_manifold(20030707u + static_cast<unsigned>(n), n);
            for (double s : {0.3, 0.5, 0.7}) {
                double bessel = mellin_hyperbolic(m, p, s);
                double quad = mellin_hyperbolic_quadrature(m, p, s);
                if (std::fabs(bessel - quad) > 1e-8 * std::fabs(quad)) bad << "n=" << n << " p=" << p << " s=" << s << " ";
            }
        }
        return bad.str();
    });

    heavy("hyperbolic zeta vanishes linearly as s -> 0", [] {
        std::ostringstream bad;
        ManifoldData m = synthetic_manifold(20030709u, 2);
        double coarse = hyperbolic_zeta(m, 0, 1e-2);
        double fine = hyperbolic_zeta(m, 0, 1e-3);
        double ratio = coarse / fine;
        if (std::fabs(ratio - 10.0) > 0.2) bad << "ratio " << ratio << " ";
        double identity = std::fabs(coexact_identity_zeta(m, 0, 0.0));
        if (std::fabs(coarse) >= 1e-2 * identity || std::fabs(fine) >= 1e-2 * identity)
            bad << "magnitude " << coarse << " vs identity " << identity << " ";
        return bad.str();
    });

    return out;
}

}  // namespace hyperzeta
