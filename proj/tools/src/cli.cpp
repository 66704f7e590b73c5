#include "besselkit_cli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "besselkit/approx.hpp"
#include "besselkit/bessel.hpp"
#include "besselkit/fracmodes.hpp"
#include "besselkit/lambda_operator.hpp"
#include "besselkit/polynomial.hpp"
#include "besselkit/precision.hpp"
#include "besselkit/validation.hpp"

namespace besselkit::cli {
namespace {

constexpr const char* kVersion = "0.1.0";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenArgs {
    std::string family = "ba";
    double p = 0.0;
    int n = 1;
    std::string format = "json";
};

struct ZerosArgs {
    double p = 0.0;
    int count = 10;
};

struct CompareArgs {
    double p = 0.0;
    int n = 10;
    std::vector<std::string> methods{"ba", "llg", "taylor"};
    double xmax = 40.0;
    double step = 0.01;
    double threshold = 0.01;
};

struct FracArgs {
    double gamma = 0.5;
    int d = 3;
    double K = 1.0;
    double R = 1.0;
    std::vector<double> t;
    int r_steps = 4;
    std::string method = "both";
    int modes = 100;
    int terms = 0;
    double c0 = 1.0;
};

void require(bool ok, const std::string& flag, const std::string& what) {
    if (!ok) throw UsageError(flag + ": " + what);
}

std::string number_list(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ';';
        s += format_number(v[i]);
    }
    return s;
}

void header(std::ostream& out, const std::string& command, const std::string& params, Accumulation mode) {
    out << "# besselkit " << kVersion << ' ' << command << '\n';
    out << "# " << params << '\n';
    out << "# precision=" << (mode == Accumulation::extended ? "extended" : "double") << '\n';
}

void run_gen(const GenArgs& a, std::ostream& out) {
    require(a.p > -1.0, "--p", "order must be > -1");
    require(a.n >= 0, "--n", "iteration index must be >= 0");
    const auto family = a.family == "ba" ? Family::Ba : Family::Be;
    const FamilyState st = family_generate(family, a.p, a.n);
    const Polynomial& poly = st.iterate(a.n);
    if (a.format == "json") {
        out << to_json(poly) << '\n';
        return;
    }
    std::ostringstream params;
    params << "family=" << a.family << " p=" << format_number(a.p) << " n=" << a.n;
    header(out, "gen", params.str(), Accumulation::standard);
    out << "r,coeff\n";
    for (int r = 0; r <= poly.degree(); ++r) out << r << ',' << format_number(poly.coeff(r)) << '\n';
}

void run_zeros(const ZerosArgs& a, std::ostream& out) {
    require(a.p > -1.0, "--p", "order must be > -1");
    require(a.count >= 1, "--count", "must be >= 1");
    const OrderContext order(a.p);
    header(out, "zeros", "p=" + format_number(a.p) + " count=" + std::to_string(a.count), Accumulation::standard);
    out << "k,z_pk\n";
    for (int k = 1; k <= a.count; ++k) out << k << ',' << format_number(order.zero(k)) << '\n';
}

void run_compare(const CompareArgs& a, Accumulation mode, std::ostream& out) {
    require(a.p > -1.0, "--p", "order must be > -1");
    require(a.n >= 0, "--n", "must be >= 0");
    require(a.xmax >= 0.0 && std::isfinite(a.xmax), "--xmax", "must be a finite value >= 0");
    require(a.step > 0.0 && std::isfinite(a.step), "--step", "must be positive");
    require(a.threshold > 0.0, "--threshold", "must be positive");
    require(!a.methods.empty(), "--methods", "needs at least one method");
    std::vector<Approximation> approx;
    for (const std::string& name : a.methods) {
        const auto m = parse_method(name);
        require(m.has_value(), "--methods", "unknown method '" + name + "' (expected ba, be, llg or taylor)");
        if (*m == Method::LLG || *m == Method::Taylor) {
            require(a.p >= 0.0, "--p", name + " needs p >= 0");
            if (*m == Method::LLG) require(a.n >= 1, "--n", "llg needs n >= 1");
        }
        approx.emplace_back(ApproxSpec{*m, a.p, a.n}, mode);
    }

    const auto grid = uniform_grid(0.0, a.xmax, a.step);
    const double p = a.p;
    std::vector<ErrorProfile> profiles;
    for (const Approximation& ap : approx) {
        profiles.push_back(profile([&](double x) { return ap(x); }, [p](double x) { return bessel_j(p, x); }, grid,
                                   a.threshold));
    }

    std::ostringstream params;
    params << "p=" << format_number(a.p) << " n=" << a.n << " xmax=" << format_number(a.xmax)
           << " step=" << format_number(a.step) << " threshold=" << format_number(a.threshold);
    header(out, "compare", params.str(), mode);
    out << "x,J_ref";
    for (const std::string& name : a.methods) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << format_number(grid[i]) << ',' << format_number(profiles.front().values_ref[i]);
        for (const ErrorProfile& pr : profiles) out << ',' << format_number(pr.values_approx[i]);
        out << '\n';
    }
    for (std::size_t k = 0; k < profiles.size(); ++k) {
        const ErrorProfile& pr = profiles[k];
        out << "# summary method=" << a.methods[k] << " sup_error=" << format_number(pr.sup_error)
            << " first_deviation_x=" << (pr.first_deviation_x ? format_number(*pr.first_deviation_x) : "none") << '\n';
    }
}

void run_fracsolve(const FracArgs& a, std::ostream& out, std::ostream& err) {
    require(a.gamma > 0.0 && a.gamma <= 2.0, "--gamma", "must lie in (0, 2]");
    require(a.d >= 1, "--d", "dimension must be >= 1");
    require(a.K > 0.0, "--K", "must be positive");
    require(a.R > 0.0, "--R", "must be positive");
    require(!a.t.empty(), "--t", "needs at least one time");
    for (double t : a.t) require(t > 0.0, "--t", "times must be positive");
    require(a.r_steps >= 1, "--r-steps", "must be >= 1");
    require(a.modes >= 1, "--modes", "must be >= 1");
    require(a.terms >= 0, "--terms", "must be >= 0 (0 = smallest-term truncation)");
    require(std::isfinite(a.c0), "--c0", "must be finite");

    const FracProblem prob{a.gamma, a.K, a.R, a.d, a.c0};
    const bool want_series = a.method != "asymptotic";
    const bool want_asym = a.method != "series";
    const bool integer_gamma = a.gamma == std::nearbyint(a.gamma);
    if (a.method == "asymptotic") {
        require(!integer_gamma, "--gamma", "the long-time expansion needs non-integer gamma");
        for (double t : a.t) {
            std::ostringstream msg;
            msg << "t=" << format_number(t) << " gives R^2/(K t^gamma)=" << format_number(prob.rho(t))
                << ", the long-time expansion needs < 1";
            require(prob.rho(t) < 1.0, "--t", msg.str());
        }
    }
    const FracSolver solver(prob);

    std::ostringstream params;
    params << "gamma=" << format_number(a.gamma) << " d=" << a.d << " K=" << format_number(a.K)
           << " R=" << format_number(a.R) << " c0=" << format_number(a.c0) << " t=" << number_list(a.t)
           << " r_steps=" << a.r_steps << " method=" << a.method << " modes=" << a.modes << " terms=" << a.terms;
    header(out, "fracsolve", params.str(), Accumulation::standard);
    out << "t,r,c_series,c_asymptotic,est_error\n";
    for (double t : a.t) {
        const bool asym_ok = want_asym && !integer_gamma && prob.rho(t) < 1.0;
        if (want_asym && !asym_ok) {
            out << "# t=" << format_number(t) << " asymptotic skipped: "
                << (integer_gamma ? "integer gamma" : "R^2/(K t^gamma) >= 1") << '\n';
        }
        bool warned = false;
        for (int i = 0; i <= a.r_steps; ++i) {
            const double r = (i == a.r_steps) ? a.R : a.R * static_cast<double>(i) / a.r_steps;
            out << format_number(t) << ',' << format_number(r) << ',';
            if (want_series) {
                const SeriesSolution s = solver.series(r, t, a.modes);
                out << format_number(a.c0 * s.value);
                if (s.tail_warning && !warned) {
                    err << "warning: t=" << format_number(t) << " mode tail estimate "
                        << format_number(std::abs(a.c0) * s.tail_estimate) << " with " << a.modes
                        << " modes; raise --modes for more accuracy\n";
                    warned = true;
                }
            }
            out << ',';
            if (asym_ok) {
                const AsymptoticSolution s = solver.asymptotic(r, t, a.terms);
                out << format_number(a.c0 * s.value) << ',' << format_number(std::abs(a.c0) * s.est_error);
            } else {
                out << ',';
            }
            out << '\n';
        }
    }
}

int run_validate(std::ostream& out) {
    const auto checks = run_validation();
    int failures = 0;
    header(out, "validate", "checks=" + std::to_string(checks.size()), Accumulation::standard);
    out << "check,status,residual,tolerance\n";
    for (const CheckResult& c : checks) {
        out << c.name << ',' << (c.passed ? "pass" : "fail") << ',' << format_number(c.residual) << ','
            << format_number(c.tolerance) << '\n';
        if (!c.passed) ++failures;
    }
    out << "# failures=" << failures << '\n';
    return failures == 0 ? kExitOk : kExitValidation;
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.14e", v);
    return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polynomial approximations to Bessel functions and fractional diffusion modes", "besselkit"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("-o,--output", output, "Write data to this file instead of standard output");
    app.set_version_flag("--version", kVersion);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Coefficients of Ba_n or Be_n");
    gen_cmd->add_option("--family", gen.family, "ba or be")->check(CLI::IsMember({"ba", "be"}));
    gen_cmd->add_option("--p", gen.p, "Bessel order (> -1)")->required();
    gen_cmd->add_option("--n", gen.n, "Iteration index")->required();
    gen_cmd->add_option("--format", gen.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    ZerosArgs zeros;
    auto* zeros_cmd = app.add_subcommand("zeros", "Positive zeros of J_p");
    zeros_cmd->add_option("--p", zeros.p, "Bessel order (> -1)")->required();
    zeros_cmd->add_option("--count", zeros.count, "Number of zeros")->required();

    CompareArgs cmp;
    auto* cmp_cmd = app.add_subcommand("compare", "Approximations of J_p against the reference on a grid");
    cmp_cmd->add_option("--p", cmp.p, "Bessel order")->required();
    cmp_cmd->add_option("--n", cmp.n, "Iteration or truncation index")->required();
    cmp_cmd->add_option("--methods", cmp.methods, "Comma-separated subset of ba,be,llg,taylor")->delimiter(',');
    cmp_cmd->add_option("--xmax", cmp.xmax, "Grid end");
    cmp_cmd->add_option("--step", cmp.step, "Grid step");
    cmp_cmd->add_option("--threshold", cmp.threshold, "Absolute error defining the first deviation");

    FracArgs frac;
    auto* frac_cmd = app.add_subcommand("fracsolve", "Fractional diffusion in a d-dimensional ball");
    frac_cmd->add_option("--gamma", frac.gamma, "Fractional order in (0, 2]")->required();
    frac_cmd->add_option("--d", frac.d, "Spatial dimension")->required();
    frac_cmd->add_option("--K", frac.K, "Generalized diffusion coefficient")->required();
    frac_cmd->add_option("--R", frac.R, "Radius")->required();
    frac_cmd->add_option("--t", frac.t, "Comma-separated times")->required()->delimiter(',');
    frac_cmd->add_option("--r-steps", frac.r_steps, "Radial intervals; r = i R / steps")->required();
    frac_cmd->add_option("--method", frac.method, "series, asymptotic or both")
        ->check(CLI::IsMember({"series", "asymptotic", "both"}));
    frac_cmd->add_option("--modes", frac.modes, "Modes in the Bessel series");
    frac_cmd->add_option("--terms", frac.terms, "Cap on long-time terms (0 = smallest-term rule)");
    frac_cmd->add_option("--c0", frac.c0, "Initial concentration");

    auto* validate_cmd = app.add_subcommand("validate", "Run the built-in invariant checks");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!output.empty()) {
        file.open(output, std::ios::binary);
        if (!file) {
            err << "--output: cannot open '" << output << "' for writing\n";
            return kExitUsage;
        }
        sink = &file;
    }

    try {
        const Accumulation mode = accumulation_from_environment();
        int code = kExitOk;
        if (*gen_cmd) {
            run_gen(gen, *sink);
        } else if (*zeros_cmd) {
            run_zeros(zeros, *sink);
        } else if (*cmp_cmd) {
            run_compare(cmp, mode, *sink);
        } else if (*frac_cmd) {
            run_fracsolve(frac, *sink, err);
        } else if (*validate_cmd) {
            code = run_validate(*sink);
        }
        sink->flush();
        return code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace besselkit::cli
