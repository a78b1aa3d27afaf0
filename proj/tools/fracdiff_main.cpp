// fracdiff command line: evaluate differintegrals over grids, sweep the
// RC cable model, query the special functions, and run the verification
// suites.  Tables go to stdout or --out as CSV (default) or JSON.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical failure.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracdiff/cable.hpp"
#include "fracdiff/errors.hpp"
#include "fracdiff/kernels.hpp"
#include "fracdiff/oracles.hpp"
#include "fracdiff/specfun.hpp"
#include "fracdiff/tolerances.hpp"
#include "fracdiff/transform.hpp"
#include "fracdiff/verify.hpp"

namespace {

using fracdiff::Complex;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 17 significant digits, lowercase exponent: byte-identical for identical
// runs and round-trip exact.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Grid {
    double start = 0.0;
    double stop = 0.0;
    long count = 0;

    double at(long i) const {
        if (count == 1) return start;
        return start + (stop - start) * static_cast<double>(i) /
                           static_cast<double>(count - 1);
    }
};

// start:stop:count, inclusive of both endpoints.
Grid parse_grid(const std::string& spec) {
    Grid g;
    char colon1 = 0, colon2 = 0;
    std::istringstream in(spec);
    if (!(in >> g.start >> colon1 >> g.stop >> colon2 >> g.count) || colon1 != ':' ||
        colon2 != ':' || !in.eof())
        throw UsageError("grid spec must be start:stop:count, got '" + spec + "'");
    if (g.count < 2) throw UsageError("grid count must be at least 2");
    if (!(g.stop > g.start)) throw UsageError("grid stop must exceed start");
    return g;
}

std::vector<Complex> parse_constants(const std::string& csv) {
    std::vector<Complex> out;
    if (csv.empty()) return out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.emplace_back(std::stod(item), 0.0);
        } catch (const std::exception&) {
            throw UsageError("bad constant '" + item + "' in --constants");
        }
    }
    return out;
}

// A value cell: number or text (empty for "not applicable").
using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

void write_csv(const Table& t, std::ostream& os) {
    for (std::size_t i = 0; i < t.header.size(); ++i)
        os << (i ? "," : "") << t.header[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            if (std::holds_alternative<double>(row[i]))
                os << fmt(std::get<double>(row[i]));
            else
                os << std::get<std::string>(row[i]);
        }
        os << "\n";
    }
}

void write_json(const Table& t, std::ostream& os) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (std::holds_alternative<double>(row[i]))
                obj[t.header[i]] = std::get<double>(row[i]);
            else
                obj[t.header[i]] = std::get<std::string>(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    os << rows.dump(2) << "\n";
}

void emit(const Table& t, const std::string& out_path, const std::string& format) {
    std::ostringstream buf;
    if (format == "csv")
        write_csv(t, buf);
    else if (format == "json")
        write_json(t, buf);
    else
        throw UsageError("format must be csv or json");

    if (out_path.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw fracdiff::Error("cannot open output file: " + out_path);
        f << buf.str();
    }
}

// ------------------------------------------------------------- differint

struct DifferintOptions {
    std::string kernel = "step";
    double order = 0.5;
    std::string grid;
    std::string method = "closed";
    double frequency = 1.0;
    double exponent = 0.0;
    std::string constants;
    double bromwich_abscissa = 1.0;
    double bromwich_extent = 400.0;
    long bromwich_nodes = 1 << 15;
    std::string bromwich_rule = "trapezoid";
    double oracle_h = 1e-3;
};

fracdiff::kernels::ClosedFormKernel make_kernel(const DifferintOptions& o) {
    using fracdiff::kernels::ClosedFormKernel;
    if (o.kernel == "step") return ClosedFormKernel::step();
    if (o.kernel == "delta") return ClosedFormKernel::delta();
    if (o.kernel == "exp") return ClosedFormKernel::exponential(o.frequency);
    if (o.kernel == "power") return ClosedFormKernel::power(o.exponent);
    throw UsageError("kernel must be one of step, delta, exp, power");
}

std::function<Complex(double)> kernel_signal(const DifferintOptions& o) {
    using fracdiff::specfun::power_plus;
    using fracdiff::specfun::reciprocal_gamma;
    if (o.kernel == "step")
        return [](double t) { return Complex(t >= 0.0 ? 1.0 : 0.0); };
    if (o.kernel == "exp") {
        const double b = o.frequency;
        return [b](double t) {
            return t < 0.0 ? Complex(0.0) : std::exp(Complex(0.0, b * t));
        };
    }
    if (o.kernel == "power") {
        const double mu = o.exponent;
        return [mu](double t) {
            return Complex(power_plus(t, mu) * reciprocal_gamma(mu + 1.0));
        };
    }
    throw UsageError("method gl unavailable for kernel " + o.kernel);
}

fracdiff::transform::LaplaceImage kernel_image(const DifferintOptions& o) {
    using namespace fracdiff::transform;
    if (o.kernel == "step") return step_image();
    if (o.kernel == "exp") return exp_image(o.frequency);
    if (o.kernel == "power") return power_image(o.exponent);
    throw UsageError("method bromwich unavailable for kernel " + o.kernel);
}

int run_differint(const DifferintOptions& o, const std::string& out_path,
                  const std::string& format) {
    const Grid grid = parse_grid(o.grid);
    if (o.method != "closed" && o.method != "bromwich" && o.method != "gl")
        throw UsageError("method must be one of closed, bromwich, gl");

    fracdiff::IntegrationConstants constants;
    constants.coefficients = parse_constants(o.constants);
    if (!constants.empty() && (o.kernel != "step" || o.method == "gl"))
        throw UsageError("--constants requires the step kernel, methods closed or bromwich");

    fracdiff::transform::BromwichConfig bcfg;
    bcfg.a = o.bromwich_abscissa;
    bcfg.half_extent = o.bromwich_extent;
    bcfg.nodes = static_cast<int>(o.bromwich_nodes);
    if (o.bromwich_rule == "trapezoid")
        bcfg.rule = fracdiff::transform::QuadratureRule::Trapezoid;
    else if (o.bromwich_rule == "tanh-sinh")
        bcfg.rule = fracdiff::transform::QuadratureRule::TanhSinhMapped;
    else
        throw UsageError("bromwich rule must be trapezoid or tanh-sinh");

    // Resolve everything that can fail from bad flags before evaluating.
    const auto kernel = make_kernel(o);
    std::function<Complex(double)> signal;
    fracdiff::transform::LaplaceImage image;
    if (o.method == "gl") signal = kernel_signal(o);
    if (o.method == "bromwich") image = kernel_image(o);

    Table t;
    t.header = {"x", "re", "im", "method", "error_bound"};
    for (long i = 0; i < grid.count; ++i) {
        const double x = grid.at(i);
        Complex v;
        std::optional<double> bound;
        try {
            if (o.method == "closed") {
                v = fracdiff::kernels::differint(kernel, o.order, x, constants);
            } else if (o.method == "bromwich") {
                auto inv = fracdiff::transform::fourier_form_differint(
                    image, o.order, x, constants, bcfg);
                v = inv.value;
                bound = inv.truncation_bound;
            } else {
                fracdiff::oracles::OracleConfig cfg;
                cfg.h = o.oracle_h;
                cfg.n_terms = static_cast<long>(x / o.oracle_h) + 16;
                v = fracdiff::oracles::grunwald_letnikov(signal, o.order, x, cfg);
            }
        } catch (const fracdiff::Error& e) {
            throw fracdiff::Error("row x=" + fmt(x) + ": " + e.what());
        }
        t.rows.push_back({x, v.real(), v.imag(), o.method,
                          bound ? Cell(*bound) : Cell(std::string())});
    }
    emit(t, out_path, format);
    return kExitOk;
}

// --------------------------------------------------------------- specfun

struct SpecfunOptions {
    std::string fn = "gamma";
    std::string grid;
    double a = 0.5;
    double b = 1.0;
    double im = 0.0;
    double mu = 0.5;
};

int run_specfun(const SpecfunOptions& o, const std::string& out_path,
                const std::string& format) {
    const Grid grid = parse_grid(o.grid);
    Table t;
    t.header = {"x", "re", "im"};
    for (long i = 0; i < grid.count; ++i) {
        const double x = grid.at(i);
        Complex v;
        const Complex z(x, o.im);
        if (o.fn == "gamma")
            v = fracdiff::specfun::gamma(z);
        else if (o.fn == "incomplete-gamma")
            v = fracdiff::specfun::upper_incomplete_gamma(o.a, z);
        else if (o.fn == "kummer")
            v = fracdiff::specfun::kummer_phi(o.a, o.b, z);
        else if (o.fn == "power-plus")
            v = Complex(fracdiff::specfun::power_plus(x, o.mu), 0.0);
        else
            throw UsageError(
                "fn must be one of gamma, incomplete-gamma, kummer, power-plus");
        t.rows.push_back({x, v.real(), v.imag()});
    }
    emit(t, out_path, format);
    return kExitOk;
}

// ----------------------------------------------------------------- cable

struct CableOptions {
    double resistance = 1.0;
    double capacitance = 1.0;
    double omega = 1.0;
    double v0_re = 1.0;
    double v0_im = 0.0;
    std::string xgrid = "0.1:2:20";
    std::string tgrid = "0.1:2:20";
    double fd_step = 1e-3;
    bool real_part = false;
};

int run_cable(const CableOptions& o, const std::string& out_path,
              const std::string& format) {
    const Grid xs = parse_grid(o.xgrid);
    const Grid ts = parse_grid(o.tgrid);
    const fracdiff::cable::CableParams p{o.resistance, o.capacitance, o.omega,
                                         Complex(o.v0_re, o.v0_im)};
    p.validate();

    Table t;
    if (o.real_part)
        t.header = {"x", "t", "v", "i", "pde_residual", "exact_residual",
                    "habitual_residual"};
    else
        t.header = {"x",    "t",    "v_re",         "v_im",
                    "i_re", "i_im", "pde_residual", "exact_residual",
                    "habitual_residual"};
    for (long i = 0; i < xs.count; ++i) {
        const double x = xs.at(i);
        for (long j = 0; j < ts.count; ++j) {
            const double time = ts.at(j);
            const Complex v = fracdiff::cable::voltage(p, x, time);
            const Complex cur = fracdiff::cable::current(p, x, time);
            const double pde = fracdiff::cable::pde_residual(p, x, time, o.fd_step);
            const auto law = fracdiff::cable::current_voltage_residual(p, x, time);
            if (o.real_part)
                t.rows.push_back(
                    {x, time, v.real(), cur.real(), pde, law.exact, law.habitual});
            else
                t.rows.push_back({x, time, v.real(), v.imag(), cur.real(), cur.imag(),
                                  pde, law.exact, law.habitual});
        }
    }
    emit(t, out_path, format);
    return kExitOk;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& suite, const fracdiff::Tolerances& tol) {
    if (!suite.empty()) {
        const auto names = fracdiff::verify::suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end())
            throw UsageError("unknown suite '" + suite + "'; see verify --list");
    }
    const auto results = suite.empty() ? fracdiff::verify::run_all(tol)
                                       : fracdiff::verify::run_suite(suite, tol);
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.suite << "/" << r.name
                  << "  worst=" << fmt(r.worst_error) << "  tol=" << fmt(r.tolerance);
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
    }
    const bool ok = fracdiff::verify::all_passed(results);
    std::cout << (ok ? "ALL PASS" : "FAILURES PRESENT") << " (" << results.size()
              << " checks)\n";
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional differintegral engine"};
    app.require_subcommand(1);
    app.fallthrough();  // global --out/--format/--tol-file may follow the subcommand

    std::string out_path;
    std::string format = "csv";
    std::string tol_file;
    app.add_option("--out", out_path, "write the table to a file instead of stdout");
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--tol-file", tol_file,
                   "JSON tolerance overrides (or env FRACDIFF_TOL_FILE)");

    DifferintOptions dopt;
    auto* differint = app.add_subcommand("differint", "evaluate a differintegral");
    differint->add_option("--kernel", dopt.kernel, "step | delta | exp | power");
    differint->add_option("--order", dopt.order, "order lambda")->required();
    differint->add_option("--grid", dopt.grid, "x grid start:stop:count")->required();
    differint->add_option("--method", dopt.method, "closed | bromwich | gl");
    differint->add_option("--frequency", dopt.frequency, "b for the exp kernel");
    differint->add_option("--exponent", dopt.exponent, "mu for the power kernel");
    differint->add_option("--constants", dopt.constants,
                          "integration constants c0,c1,... (negative integer orders)");
    differint->add_option("--bromwich-abscissa", dopt.bromwich_abscissa, "line Re s");
    differint->add_option("--bromwich-extent", dopt.bromwich_extent,
                          "half extent of the line");
    differint->add_option("--bromwich-nodes", dopt.bromwich_nodes, "quadrature nodes");
    differint->add_option("--bromwich-rule", dopt.bromwich_rule,
                          "trapezoid | tanh-sinh");
    differint->add_option("--oracle-h", dopt.oracle_h, "GL step");

    SpecfunOptions sopt;
    auto* specfun = app.add_subcommand("specfun", "evaluate a special function");
    specfun->add_option("--fn", sopt.fn,
                        "gamma | incomplete-gamma | kummer | power-plus");
    specfun->add_option("--grid", sopt.grid, "real part grid start:stop:count")
        ->required();
    specfun->add_option("--a", sopt.a, "first parameter");
    specfun->add_option("--b", sopt.b, "second parameter (kummer)");
    specfun->add_option("--im", sopt.im, "imaginary part of the argument");
    specfun->add_option("--mu", sopt.mu, "exponent (power-plus)");

    CableOptions copt;
    auto* cable = app.add_subcommand("cable", "sweep the semi-infinite RC cable");
    cable->add_option("--resistance", copt.resistance, "R per unit length");
    cable->add_option("--capacitance", copt.capacitance, "C per unit length");
    cable->add_option("--omega", copt.omega, "drive angular frequency");
    cable->add_option("--v0-re", copt.v0_re, "Re V0");
    cable->add_option("--v0-im", copt.v0_im, "Im V0");
    cable->add_option("--xgrid", copt.xgrid, "position grid start:stop:count");
    cable->add_option("--tgrid", copt.tgrid, "time grid start:stop:count");
    cable->add_option("--fd-step", copt.fd_step, "PDE residual stencil width");
    cable->add_flag("--real-part", copt.real_part,
                    "emit physical (real-part) voltage and current columns");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", suite, "run a single suite by name");
    verify->add_flag_callback("--list", [] {
        for (const auto& n : fracdiff::verify::suite_names()) std::cout << n << "\n";
        std::exit(kExitOk);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const auto tol = fracdiff::Tolerances::resolve(tol_file);
        if (differint->parsed()) return run_differint(dopt, out_path, format);
        if (specfun->parsed()) return run_specfun(sopt, out_path, format);
        if (cable->parsed()) return run_cable(copt, out_path, format);
        if (verify->parsed()) return run_verify(suite, tol);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fracdiff::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
