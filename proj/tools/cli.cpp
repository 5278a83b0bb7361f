#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/heat_zeta.hpp"
#include "hyperzeta/manifold.hpp"
#include "hyperzeta/plancherel.hpp"
#include "hyperzeta/quadrature.hpp"
#include "hyperzeta/verification.hpp"

namespace hyperzeta::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string render_value(const PiValue& v, const std::string& format, int digits) {
    if (format == "exact") return v.to_string();
    if (format == "float") return v.to_decimal(digits);
    return v.to_string() + " = " + v.to_decimal(digits);
}

std::string fixed12(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

// ---------------------------------------------------------------------------

struct AnomalyArgs {
    int dim = 0;
    int form = 0;
    std::string alpha_mode = "default";
    std::string mass_sq = "0";
    std::string radius = "1";
    std::optional<std::string> volume;
    std::string format = "both";
    std::optional<int> digits;
    bool breakdown = false;
};

int cmd_anomaly(const AnomalyArgs& a, std::ostream& out) {
    AnomalySpec spec;
    if (a.alpha_mode == "default") {
        spec = AnomalySpec::standard(a.dim, a.form);
    } else if (a.alpha_mode == "conformal-scalar") {
        if (a.form != 0) throw UsageError("alpha mode 'conformal-scalar' requires --form 0");
        spec = AnomalySpec::conformal_scalar(a.dim);
    } else {
        if (a.form != 0) throw UsageError("alpha mode 'massive' requires --form 0");
        spec = AnomalySpec::massive_scalar(a.dim, Rational::parse(a.mass_sq));
    }
    spec.radius = Rational::parse(a.radius);
    if (a.volume) spec.volume = Rational::parse(*a.volume);
    spec.validate();

    const int digits = a.digits.value_or(default_digits());
    AnomalyResult r = conformal_anomaly(spec);
    out << render_value(r.value, a.format, digits) << "\n";
    if (r.zeta_zero) out << "zeta(0) = " << render_value(*r.zeta_zero, a.format, digits) << "\n";
    if (a.breakdown) {
        out << "alpha = " << spec.alpha << " (" << to_string(spec.policy) << ")\n";
        out << "prefactor = " << r.prefactor << "\n";
        for (const auto& term : r.breakdown)
            out << "  j=" << term.j << " l=" << term.ell << "  " << term.value << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct TableArgs {
    std::string which = "table2";
    std::string format = "markdown";
    std::vector<int> dims;
    std::vector<int> forms;
    std::optional<int> digits;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
    TableKind kind = a.which == "table1" ? TableKind::scalar_table
                     : a.which == "table2" ? TableKind::pform_table
                                           : TableKind::custom;
    if (kind == TableKind::custom && (a.dims.empty() || a.forms.empty()))
        throw UsageError("--which custom needs --dims and --forms");
    AnomalyTable table = generate_table(kind, kind == TableKind::custom ? a.dims : std::vector<int>{},
                                        kind == TableKind::custom ? a.forms : std::vector<int>{});
    TableFormat format = a.format == "csv" ? TableFormat::csv
                         : a.format == "plain" ? TableFormat::plain
                                               : TableFormat::markdown;
    out << OutputTable::from(table, a.digits.value_or(default_digits())).render(format);
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct PlancherelArgs {
    int dim = 2;
    int form = 0;
    std::vector<double> r_values;
};

int cmd_plancherel(const PlancherelArgs& a, std::ostream& out) {
    if (a.dim < 2 || a.dim % 2 != 0) throw UsageError("--dim must be even and >= 2");
    const int k = a.dim / 2;
    EvenPolynomial poly = plancherel_polynomial(k, a.form);
    out << "P_sigma" << a.form << "(r) = " << poly.to_string() << "\n";
    out << "miatello = [";
    for (std::size_t i = 0; i < poly.coefficients().size(); ++i)
        out << (i ? ", " : "") << poly.coefficients()[i];
    out << "]\n";
    for (double r : a.r_values) out << "mu(" << r << ") = " << fixed12(plancherel_density(k, a.form, r)) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct HeatArgs {
    std::string manifold;
    int form = 0;
    std::vector<double> times{1.0};
    std::string mode = "coexact";
};

int cmd_heat_trace(const HeatArgs& a, std::ostream& out) {
    ManifoldData m = load_manifold(a.manifold);
    out << "t,identity,hyperbolic,betti,total,hyperbolic_tail\n";
    bool empty = false;
    for (double t : a.times) {
        HeatTraceBreakdown b = a.mode == "hodge" ? hodge_trace(m, a.form, t) : coexact_trace(m, a.form, t);
        empty = b.empty_spectrum;
        out << fixed12(t) << "," << fixed12(b.identity_part) << "," << fixed12(b.hyperbolic_part) << ","
            << fixed12(b.betti_part) << "," << fixed12(b.total) << "," << fixed12(b.hyperbolic_remainder_bound)
            << "\n";
    }
    if (empty) out << "# warning: empty length spectrum, hyperbolic part is zero\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct ZetaArgs {
    std::string manifold;
    int form = 0;
    std::vector<double> s_values{0.3, 0.5, 0.7};
};

int cmd_zeta_check(const ZetaArgs& a, std::ostream& out) {
    ManifoldData m = load_manifold(a.manifold);
    bool ok = true;
    out << "s,mellin_bessel,mellin_quadrature,relative_difference,status\n";
    for (double s : a.s_values) {
        double bessel = mellin_hyperbolic(m, a.form, s);
        double quad = mellin_hyperbolic_quadrature(m, a.form, s);
        double rel = quad == 0.0 ? std::fabs(bessel) : std::fabs(bessel - quad) / std::fabs(quad);
        bool pass = rel <= 1e-8;
        ok = ok && pass;
        out << s << "," << fixed12(bessel) << "," << fixed12(quad) << "," << std::setprecision(3) << rel << ","
            << (pass ? "PASS" : "FAIL") << "\n";
    }

    double coarse = hyperbolic_zeta(m, a.form, 1e-2);
    double fine = hyperbolic_zeta(m, a.form, 1e-3);
    double identity = coexact_identity_zeta(m, a.form, 0.0);
    out << "hyperbolic_zeta(1e-2) = " << fixed12(coarse) << "\n";
    out << "hyperbolic_zeta(1e-3) = " << fixed12(fine) << "\n";
    if (fine != 0.0) {
        double ratio = coarse / fine;
        bool pass = std::fabs(ratio - 10.0) <= 0.2;
        ok = ok && pass;
        out << "ratio = " << fixed12(ratio) << " (expect 10 +- 2%) " << (pass ? "PASS" : "FAIL") << "\n";
    } else {
        out << "ratio = n/a (empty spectrum)\n";
    }
    out << "identity zeta(0), co-exact, numeric = " << fixed12(identity) << "\n";
    if (2 * a.form < m.dimension()) {
        Rational exact_sum;
        for (int j = 0; j <= a.form; ++j)
            exact_sum += zeta_identity_at_zero(m.dimension(), a.form, j, Rational(a.form) + Rational((m.dimension() - 1) * (m.dimension() - 1), 4));
        double expected = identity_zeta_scale(m) * exact_sum.to_double();
        out << "identity zeta(0), exact sector sum * scale = " << fixed12(expected)
            << (a.form <= 1 ? "" : " (table form; differs from the trace form for p >= 2)") << "\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------

struct SynthArgs {
    std::uint64_t seed = 1;
    int count = 5;
    double min_length = 2.0;
    int max_power = 1;
    int dim = 2;
    double volume = 4.0 * std::numbers::pi;
    std::vector<long> betti;
    std::string output;
};

int cmd_synth(const SynthArgs& a, std::ostream& out) {
    auto spectrum = synth_spectrum(a.seed, a.count, a.min_length, a.max_power, a.dim);
    ManifoldData m = ManifoldData::create(a.dim, a.volume, a.betti, std::move(spectrum));
    if (a.output.empty()) out << dump_manifold(m);
    else save_manifold(m, a.output);
    return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_verify(bool fast, const std::string& golden, std::ostream& out) {
    VerifyOptions options;
    options.fast = fast;
    if (!golden.empty()) options.golden_path = golden;
    auto outcomes = run_verification(options);
    int failures = 0;
    for (const auto& o : outcomes) {
        switch (o.status) {
            case CheckOutcome::Status::pass: out << "[PASS] " << o.name << "\n"; break;
            case CheckOutcome::Status::skip: out << "[SKIP] " << o.name << " (" << o.detail << ")\n"; break;
            case CheckOutcome::Status::fail:
                ++failures;
                out << "[FAIL] " << o.name << ": " << o.detail << "\n";
                break;
        }
    }
    out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << "\n";
    return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

// ---------------------------------------------------------------------------

int default_digits() {
    const char* env = std::getenv("HYPERZETA_PRECISION");
    if (env == nullptr || *env == '\0') return 6;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 60) throw UsageError("HYPERZETA_PRECISION must be an integer in [1, 60]");
    return static_cast<int>(v);
}

OutputTable OutputTable::from(const AnomalyTable& table, int digits) {
    OutputTable out;
    out.scalar = table.kind == TableKind::scalar_table;
    out.dims = table.dims;
    out.forms = table.forms;
    for (const auto& c : table.cells) {
        Cell cell{c.dimension, c.form_order, c.excluded(), "excluded", "excluded", c.excluded_reason};
        if (c.result) {
            cell.exact = c.result->value.to_string();
            cell.numeric = c.result->value.to_decimal(digits);
        }
        out.cells.push_back(std::move(cell));
    }
    return out;
}

std::string OutputTable::render(TableFormat format) const {
    std::ostringstream os;
    switch (format) {
        case TableFormat::csv:
            os << "n,p,exact,numerical\n";
            for (const auto& c : cells) os << c.dimension << "," << c.form_order << "," << c.exact << "," << c.numeric << "\n";
            break;
        case TableFormat::plain:
            for (const auto& c : cells) {
                os << "n=" << c.dimension << " p=" << c.form_order << "  ";
                if (c.excluded) os << "excluded (" << c.note << ")\n";
                else os << c.exact << " = " << c.numeric << "\n";
            }
            break;
        case TableFormat::markdown:
            if (scalar) {
                os << "| n | exact | numerical |\n|---|---|---|\n";
                for (const auto& c : cells) os << "| " << c.dimension << " | " << c.exact << " | " << c.numeric << " |\n";
            } else {
                os << "| n |";
                for (int p : forms) os << " p=" << p << " |";
                os << "\n|---|";
                for (std::size_t i = 0; i < forms.size(); ++i) os << "---|";
                os << "\n";
                std::size_t idx = 0;
                for (int n : dims) {
                    os << "| " << n << " |";
                    for (std::size_t i = 0; i < forms.size(); ++i, ++idx) {
                        const Cell& c = cells[idx];
                        if (c.excluded) os << " - |";
                        else os << " " << c.exact << " = " << c.numeric << " |";
                    }
                    os << "\n";
                }
            }
            break;
    }
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hyperzeta: conformal anomaly of p-forms on compact hyperbolic manifolds", "hyperzeta"};
    app.require_subcommand(1);

    AnomalyArgs anomaly;
    auto* sub_anomaly = app.add_subcommand("anomaly", "Exact conformal anomaly for one (n, p)");
    sub_anomaly->add_option("--dim", anomaly.dim, "Even dimension n")->required();
    sub_anomaly->add_option("--form", anomaly.form, "Form order p < n/2");
    sub_anomaly->add_option("--alpha-mode", anomaly.alpha_mode, "alpha policy")
        ->check(CLI::IsMember({"default", "conformal-scalar", "massive"}));
    sub_anomaly->add_option("--mass-sq", anomaly.mass_sq, "m^2 R^2 for --alpha-mode massive (rational)");
    sub_anomaly->add_option("--radius", anomaly.radius, "Radius R (rational)");
    sub_anomaly->add_option("--volume", anomaly.volume, "Vol(Gamma\\G) (rational); also prints zeta(0)");
    sub_anomaly->add_option("--format", anomaly.format, "exact | float | both")
        ->check(CLI::IsMember({"exact", "float", "both"}));
    sub_anomaly->add_option("--digits", anomaly.digits, "Significant digits for floats")->check(CLI::Range(1, 60));
    sub_anomaly->add_flag("--breakdown", anomaly.breakdown, "Print the per-(j, l) exact terms");

    TableArgs table;
    auto* sub_table = app.add_subcommand("table", "Reproduce or extend the anomaly tables");
    sub_table->add_option("--which", table.which, "table1 | table2 | custom")
        ->check(CLI::IsMember({"table1", "table2", "custom"}));
    sub_table->add_option("--format", table.format, "markdown | csv | plain")
        ->check(CLI::IsMember({"markdown", "csv", "plain"}));
    sub_table->add_option("--dims", table.dims, "Dimensions for --which custom")->delimiter(',');
    sub_table->add_option("--forms", table.forms, "Form orders for --which custom")->delimiter(',');
    sub_table->add_option("--digits", table.digits, "Significant digits for floats")->check(CLI::Range(1, 60));

    PlancherelArgs planch;
    auto* sub_planch = app.add_subcommand("plancherel", "Plancherel polynomial, Miatello coefficients, density");
    sub_planch->add_option("--dim", planch.dim, "Even dimension n = 2k")->required();
    sub_planch->add_option("--form", planch.form, "Index p in [0, n-1]");
    sub_planch->add_option("--r", planch.r_values, "Points at which to evaluate mu(r)")->delimiter(',');

    HeatArgs heat;
    auto* sub_heat = app.add_subcommand("heat-trace", "Heat trace breakdown for a manifold file");
    sub_heat->add_option("--manifold", heat.manifold, "Manifold file")->required();
    sub_heat->add_option("--form", heat.form, "Form order p");
    sub_heat->add_option("--time", heat.times, "Comma-separated t values")->delimiter(',');
    sub_heat->add_option("--mode", heat.mode, "coexact | hodge")->check(CLI::IsMember({"coexact", "hodge"}));

    ZetaArgs zeta;
    auto* sub_zeta = app.add_subcommand("zeta-check", "Mellin/Bessel consistency and s -> 0 behaviour");
    sub_zeta->add_option("--manifold", zeta.manifold, "Manifold file")->required();
    sub_zeta->add_option("--form", zeta.form, "Form order p");
    sub_zeta->add_option("--s-values", zeta.s_values, "Comma-separated s values in (0, 1)")->delimiter(',');

    SynthArgs synth;
    auto* sub_synth = app.add_subcommand("synth-spectrum", "Write a synthetic manifold file");
    sub_synth->add_option("--seed", synth.seed);
    sub_synth->add_option("--count", synth.count, "Number of primitive geodesics");
    sub_synth->add_option("--min-length", synth.min_length);
    sub_synth->add_option("--max-power", synth.max_power);
    sub_synth->add_option("--dim", synth.dim);
    sub_synth->add_option("--volume", synth.volume, "Vol(Gamma\\G)");
    sub_synth->add_option("--betti", synth.betti, "b_0..b_n")->delimiter(',');
    sub_synth->add_option("--output", synth.output, "Output path (stdout if omitted)");

    bool fast = false;
    std::string golden;
    auto* sub_verify = app.add_subcommand("verify", "Run the self-verification suite");
    sub_verify->add_flag("--fast", fast, "Skip quadrature-heavy checks");
    sub_verify->add_option("--golden", golden, "Golden table file to check against");

    std::vector<const char*> argv{"hyperzeta"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (sub_anomaly->parsed()) return cmd_anomaly(anomaly, out);
        if (sub_table->parsed()) return cmd_table(table, out);
        if (sub_planch->parsed()) return cmd_plancherel(planch, out);
        if (sub_heat->parsed()) return cmd_heat_trace(heat, out);
        if (sub_zeta->parsed()) return cmd_zeta_check(zeta, out);
        if (sub_synth->parsed()) return cmd_synth(synth, out);
        if (sub_verify->parsed()) return cmd_verify(fast, golden, out);
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ManifoldError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}

}  // namespace hyperzeta::cli
