#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgame/algebra_factory.hpp"
#include "qgame/report_io.hpp"
#include "qgame/scenario_file.hpp"
#include "qgame/version.hpp"

namespace {

using namespace qgame;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    double tol = 1e-12;
    std::string format = "text";
    bool quiet = false;
};

struct AlgebraOptions {
    std::string algebra;
    std::vector<int> nmax;
    long long cutoff = 0;
    std::string kappa;
    double kappa1 = 1.0;
    double kappa2 = 1.0;
    std::string bound = "below";
    int truncation = 8;
    std::vector<int> signs;

    CLI::Option* nmax_opt = nullptr;
    CLI::Option* cutoff_opt = nullptr;
    CLI::Option* kappa_opt = nullptr;
    CLI::Option* signs_opt = nullptr;
};

void add_algebra_options(CLI::App* cmd, AlgebraOptions& o) {
    cmd->add_option("--algebra", o.algebra,
                    "algebra kind: fock, multimode, su2, su11, "
                    "single-mode-su11")
        ->required();
    o.nmax_opt = cmd->add_option(
        "--nmax", o.nmax,
        "Fock truncation n_max; repeat or list per mode for multimode");
    o.cutoff_opt = cmd->add_option("--cutoff", o.cutoff,
                                   "total-number cutoff (multimode interior)");
    o.kappa_opt = cmd->add_option(
        "--kappa", o.kappa,
        "spin label for su2 (half-integer, e.g. 3/2) or bound parameter for "
        "su11 (real)");
    cmd->add_option("--kappa1", o.kappa1, "payoff units of player 1 (fock)");
    cmd->add_option("--kappa2", o.kappa2, "payoff units of player 2 (fock)");
    cmd->add_option("--bound", o.bound, "su11 spectrum bound: below or above")
        ->check(CLI::IsMember({"below", "above"}));
    cmd->add_option("--truncation", o.truncation,
                    "su11 truncation dimension (number of levels kept)");
    o.signs_opt = cmd->add_option("--signs", o.signs,
                                  "per-mode signs (+1/-1) for the signed "
                                  "number operator (multimode)");
}

double parse_real_param(const std::string& text, const char* what) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        return HalfInteger::parse(text).value();
    }
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw ParseError(std::string(what) + ": not a number: \"" + text +
                         "\"");
    }
    return v;
}

AlgebraSpec spec_from_options(const AlgebraOptions& o) {
    AlgebraSpec spec;
    spec.kind = algebra_kind_from_string(o.algebra);
    switch (spec.kind) {
        case AlgebraKind::fock:
        case AlgebraKind::single_mode_su11:
            if (o.nmax.size() != 1) {
                throw ParseError("--nmax: exactly one value required for " +
                                 o.algebra);
            }
            spec.n_max = o.nmax[0];
            spec.kappa1 = o.kappa1;
            spec.kappa2 = o.kappa2;
            break;
        case AlgebraKind::multimode:
            if (o.nmax.empty()) {
                throw ParseError("--nmax: at least one value required for "
                                 "multimode");
            }
            spec.mode_n_max = o.nmax;
            if (o.cutoff_opt->count() > 0) spec.total_cutoff = o.cutoff;
            if (o.signs_opt->count() > 0) spec.signs = o.signs;
            break;
        case AlgebraKind::su2:
            if (o.kappa_opt->count() == 0) {
                throw ParseError("--kappa is required for su2");
            }
            spec.kappa = HalfInteger::parse(o.kappa);
            break;
        case AlgebraKind::su11:
            if (o.kappa_opt->count() == 0) {
                throw ParseError("--kappa is required for su11");
            }
            spec.kappa_real = parse_real_param(o.kappa, "--kappa");
            spec.bound =
                o.bound == "above" ? Su11Bound::above : Su11Bound::below;
            spec.truncation = o.truncation;
            break;
    }
    return spec;
}

int run_verify(const GlobalOptions& global, const AlgebraOptions& options) {
    const AlgebraBundle bundle = make_algebra(spec_from_options(options));
    const VerificationReport report =
        verify_algebra(bundle.relation_operators, bundle.canonical,
                       bundle.interior, global.tol);
    if (!global.quiet) {
        std::cout << render_verification(
            bundle.description, report,
            output_format_from_string(global.format));
    }
    return report.all_pass ? kExitOk : kExitCheckFailed;
}

int run_spectrum(const GlobalOptions& global, const AlgebraOptions& options,
                 const std::string& operator_name) {
    const AlgebraBundle bundle = make_algebra(spec_from_options(options));
    const OperatorMatrix& op = find_measurable(bundle, operator_name);
    const EigenSystem eig = hermitian_eigensystem(op, 1e-10);
    if (!global.quiet) {
        std::cout << render_spectrum(bundle.description, operator_name,
                                     eig.values,
                                     output_format_from_string(global.format));
    }
    return kExitOk;
}

int run_scenario(const GlobalOptions& global, const std::string& path) {
    const ScenarioFile file = load_scenario_file(path);
    const AlgebraBundle bundle = make_algebra(file.algebra);

    const GameState state = prepare_state(bundle.space, file.state);
    const double leak = state.boundary_leak();
    if (leak > kBoundaryLeakTol) {
        std::ostringstream os;
        os << "state leaks onto the truncation boundary (amplitude " << leak
           << " above threshold " << kBoundaryLeakTol
           << "); algebraic guarantees do not apply there";
        throw TruncationError(os.str());
    }

    RunDocument doc;
    doc.algebra = bundle.description;
    doc.outputs = file.outputs;
    doc.measurement =
        measure(state, bundle.measurable, file.outputs.spectral_table);
    doc.measurement.context.tolerance = file.tol;
    for (auto& op : doc.measurement.operators) {
        for (const auto& [name, shift] : bundle.normal_order_shifts) {
            if (op.name == name) op.normal_order_shift = shift;
        }
    }
    if (file.run_canonical_checks) {
        doc.checks = verify_algebra(bundle.relation_operators,
                                    bundle.canonical, bundle.interior,
                                    file.tol);
    }

    if (!global.quiet) {
        std::cout << render_run(doc, output_format_from_string(global.format));
    }
    return (doc.checks && !doc.checks->all_pass) ? kExitCheckFailed : kExitOk;
}

int run_classical_limit(const GlobalOptions& global,
                        const std::string& kappa_max) {
    const HalfInteger limit = HalfInteger::parse(kappa_max);
    if (limit.twice() < 1) {
        throw ParseError("--kappa-max must be >= 1/2");
    }
    std::vector<HalfInteger> kappas;
    for (long t = 1; t <= limit.twice(); ++t) {
        kappas.push_back(HalfInteger::from_twice(t));
    }
    const auto rows = classical_limit_profile(kappas);
    if (!global.quiet) {
        std::cout << render_classical_limit(
            rows, output_format_from_string(global.format));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-commutative quantum game operator engine"};
    app.set_version_flag("--version", std::string("qgame ") + kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--tol", global.tol, "residual tolerance for checks");
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--quiet", global.quiet, "suppress report output");

    AlgebraOptions verify_options;
    CLI::App* verify =
        app.add_subcommand("verify", "check the canonical commutation "
                                     "relations of an algebra");
    add_algebra_options(verify, verify_options);

    AlgebraOptions spectrum_options;
    std::string operator_name;
    CLI::App* spectrum =
        app.add_subcommand("spectrum", "print the sorted eigenvalues of a "
                                       "payoff operator");
    add_algebra_options(spectrum, spectrum_options);
    spectrum->add_option("--operator", operator_name, "operator name")
        ->required();

    std::string scenario_path;
    CLI::App* run = app.add_subcommand(
        "run", "evaluate a scenario file and emit its measurement report");
    run->add_option("scenario", scenario_path, "scenario JSON file")
        ->required();

    std::string kappa_max;
    CLI::App* classical = app.add_subcommand(
        "classical-limit",
        "scaled commutator norm 1/(kappa+1) for kappa = 1/2 .. kappa-max");
    classical->add_option("--kappa-max", kappa_max, "largest kappa")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(global, verify_options);
        if (spectrum->parsed()) {
            return run_spectrum(global, spectrum_options, operator_name);
        }
        if (run->parsed()) return run_scenario(global, scenario_path);
        if (classical->parsed()) {
            return run_classical_limit(global, kappa_max);
        }
        return kExitUsage;
    } catch (const TruncationError& e) {
        std::cerr << "TruncationError: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const NotHermitianError& e) {
        std::cerr << "NotHermitianError: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RepresentationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
