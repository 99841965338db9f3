// Command-line front end: polynomial evaluation, figure-data replication,
// zero and convergence reports, and the library invariant suite.
//
// Exit codes: 0 success, 1 validation error, 2 numerical failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mhpoly/asymptotics.hpp"
#include "mhpoly/checks.hpp"
#include "mhpoly/family.hpp"
#include "mhpoly/series.hpp"
#include "mhpoly/zeros.hpp"

namespace {

using nlohmann::json;
using namespace mhpoly;

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

cplx parse_complex(const std::string& s) {
    std::size_t used = 0;
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        const double re = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad number: " + s);
        return {re, 0.0};
    }
    const std::string rs = s.substr(0, comma), is = s.substr(comma + 1);
    const double re = std::stod(rs, &used);
    if (used != rs.size()) throw std::invalid_argument("bad number: " + rs);
    const double im = std::stod(is, &used);
    if (used != is.size()) throw std::invalid_argument("bad number: " + is);
    return {re, im};
}

PolyKind parse_kind(const std::string& k) {
    if (k == "standard") return PolyKind::standard;
    if (k == "monic") return PolyKind::monic;
    if (k == "associated") return PolyKind::associated;
    throw std::invalid_argument("unknown kind: " + k);
}

std::string kind_name(PolyKind k) {
    switch (k) {
        case PolyKind::standard: return "standard";
        case PolyKind::monic: return "monic";
        case PolyKind::associated: return "associated";
    }
    return "?";
}

struct FamilyOpts {
    std::string family = "charlier";
    double a = 1.23;
    double beta = 1.23;
    double c = 0.36;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "family: charlier or meixner")
            ->check(CLI::IsMember({"charlier", "meixner"}));
        cmd->add_option("--a", a, "Charlier parameter a > 0 (default 1.23)");
        cmd->add_option("--beta", beta, "Meixner parameter beta > 0 (default 1.23)");
        cmd->add_option("--c", c, "Meixner parameter c in (0,1) (default 0.36)");
    }

    Family build() const {
        return family == "meixner" ? Family::meixner(beta, c) : Family::charlier(a);
    }

    void describe(json& j) const {
        j["family"] = family;
        if (family == "meixner") {
            j["beta"] = beta;
            j["c"] = c;
        } else {
            j["a"] = a;
        }
    }
};

struct SeriesOpts {
    double rel_tol = 1e-15;
    int max_terms = 10000;

    void attach(CLI::App* cmd) {
        cmd->add_option("--rel-tol", rel_tol, "series stopping tolerance");
        cmd->add_option("--max-terms", max_terms, "series term budget");
    }

    SeriesControl build() const { return {rel_tol, max_terms, 3}; }
};

int cmd_eval(const FamilyOpts& fo, const std::string& kind_str, long n, const std::string& x_str,
             bool scaled, const std::string& format) {
    const Family fam = fo.build();
    const PolyKind kind = parse_kind(kind_str);
    const cplx x = parse_complex(x_str);
    const cplx value = eval_poly(fam, kind, n, x);
    ScaledPolyValue sv{cplx(0.0), fam, kind, n};
    if (scaled) sv = scaled_poly(fam, kind, n, x);

    if (format == "json") {
        json j;
        fo.describe(j);
        j["kind"] = kind_str;
        j["n"] = n;
        j["x"] = {{"re", x.real()}, {"im", x.imag()}};
        j["value"] = {{"re", value.real()}, {"im", value.imag()}};
        if (scaled) {
            j["scaled"] = {{"re", sv.value.real()}, {"im", sv.value.imag()}};
            j["normalizer"] = sv.normalizer();
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::string header = "family,kind,n,x_re,x_im,value_re,value_im";
        std::string row = fo.family + "," + kind_str + "," + std::to_string(n) + "," +
                          g17(x.real()) + "," + g17(x.imag()) + "," + g17(value.real()) + "," +
                          g17(value.imag());
        if (scaled) {
            header += ",scaled_re,scaled_im,normalizer";
            row += "," + g17(sv.value.real()) + "," + g17(sv.value.imag()) + "," +
                   sv.normalizer();
        }
        std::cout << header << "\n" << row << "\n";
    }
    return 0;
}

int cmd_grid(const FamilyOpts& fo, const std::string& kind_str, long n, double x_min, double x_max,
             long steps, bool scaled, const std::string& format) {
    if (steps < 2) throw std::invalid_argument("grid: steps must be >= 2");
    if (!(x_min < x_max)) throw std::invalid_argument("grid: requires x_min < x_max");
    const Family fam = fo.build();
    const PolyKind kind = parse_kind(kind_str);
    const double step = (x_max - x_min) / double(steps - 1);

    std::vector<double> xs(steps), values(steps);
    for (long i = 0; i < steps; ++i) {
        const double x = (i == steps - 1) ? x_max : x_min + double(i) * step;
        xs[i] = x;
        values[i] = scaled ? scaled_poly(fam, kind, n, cplx(x)).value.real()
                           : eval_poly(fam, kind, n, cplx(x)).real();
    }

    if (format == "json") {
        json j;
        fo.describe(j);
        j["kind"] = kind_str;
        j["n"] = n;
        j["scaled"] = scaled;
        json rows = json::array();
        for (long i = 0; i < steps; ++i) rows.push_back({{"x", xs[i]}, {"value", values[i]}});
        j["rows"] = rows;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (scaled ? "x,scaled_value\n" : "x,value\n");
        for (long i = 0; i < steps; ++i)
            std::cout << g17(xs[i]) << "," << g17(values[i]) << "\n";
    }
    return 0;
}

int cmd_figure(const std::string& preset, FamilyOpts fo, long n, double x_min, double x_max,
               long steps, const SeriesOpts& so) {
    if (steps < 2) throw std::invalid_argument("figure: steps must be >= 2");
    if (!(x_min < x_max)) throw std::invalid_argument("figure: requires x_min < x_max");
    fo.family = (preset == "fig2") ? "meixner" : "charlier";
    const Family fam = fo.build();
    const double step = (x_max - x_min) / double(steps - 1);

    std::cout << "x,scaled_poly,limit,abs_err\n";
    for (long i = 0; i < steps; ++i) {
        const double x = (i == steps - 1) ? x_max : x_min + double(i) * step;
        const double scaled = scaled_poly(fam, PolyKind::associated, n, cplx(x)).value.real();
        const double limit = mh_limit(fam, PolyKind::associated, cplx(x), so.build()).real();
        std::cout << g17(x) << "," << g17(scaled) << "," << g17(limit) << ","
                  << g17(std::abs(scaled - limit)) << "\n";
    }
    return 0;
}

int cmd_zeros(const FamilyOpts& fo, const std::string& kind_str, long n,
              const std::vector<double>& window, double scan_step) {
    const Family fam = fo.build();
    const PolyKind kind = parse_kind(kind_str);
    if (window.size() != 2) throw std::invalid_argument("zeros: --window needs lo,hi");

    const ZeroSet poly = poly_zeros(fam, kind, n);
    const BracketConfig config{window[0], window[1], scan_step, 1e-12};
    const ZeroSet limit = limit_zeros(LimitTarget::mh(fam, kind), config);

    json j;
    fo.describe(j);
    j["kind"] = kind_str;
    j["n"] = n;
    j["window"] = {window[0], window[1]};
    j["scan_step"] = scan_step;
    j["poly_zero_count"] = poly.zeros.size();
    json in_window = json::array();
    for (const double z : poly.zeros)
        if (z >= window[0] && z <= window[1]) in_window.push_back(z);
    j["poly_zeros"] = in_window;
    j["limit_zeros"] = limit.zeros;
    json diffs = json::array();
    for (std::size_t k = 0; k < std::min(in_window.size(), limit.zeros.size()); ++k)
        diffs.push_back(double(in_window[k]) - limit.zeros[k]);
    j["differences"] = diffs;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_markov(const FamilyOpts& fo, const std::string& z_str, std::vector<long> n_list,
               const SeriesOpts& so) {
    const Family fam = fo.build();
    const cplx z = parse_complex(z_str);
    if (n_list.empty()) n_list = {50, 100, 200, 500};
    const cplx reference = stieltjes(fam, z, so.build());

    json j;
    fo.describe(j);
    j["z"] = {{"re", z.real()}, {"im", z.imag()}};
    j["stieltjes"] = {{"re", reference.real()}, {"im", reference.imag()}};
    json rows = json::array();
    for (const long n : n_list) {
        const cplx ratio = markov_ratio(fam, z, n);
        rows.push_back({{"n", n},
                        {"ratio", {{"re", ratio.real()}, {"im", ratio.imag()}}},
                        {"abs_err", std::abs(ratio - reference)}});
    }
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_check(bool inject_fault) {
    CheckOptions options;
    if (inject_fault) options.b_coeff_perturbation = 1e-3;
    const CheckReport report = run_checks(options);
    json j;
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"measured", c.measured},
                          {"tolerance", c.tolerance}});
    j["checks"] = checks;
    j["count"] = report.checks.size();
    j["status"] = report.all_pass() ? "pass" : "fail";
    std::cout << j.dump(2) << "\n";
    return report.all_pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Charlier and Meixner polynomials: evaluation, limiting functions, "
                 "Stieltjes transforms, and zeros"};
    app.require_subcommand(1);

    int rc = 0;

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a polynomial at one point");
    static FamilyOpts eval_fo;
    static std::string eval_kind = "standard", eval_x, eval_format = "csv";
    static long eval_n = 0;
    static bool eval_scaled = false;
    eval_fo.attach(eval);
    eval->add_option("--kind", eval_kind)->check(CLI::IsMember({"standard", "monic", "associated"}));
    eval->add_option("--n", eval_n, "polynomial index")->required();
    eval->add_option("--x", eval_x, "evaluation point, re or re,im")->required();
    eval->add_flag("--scaled", eval_scaled, "also print the scaled value and its normalizer");
    eval->add_option("--format", eval_format)->check(CLI::IsMember({"csv", "json"}));
    eval->callback(
        [&] { rc = cmd_eval(eval_fo, eval_kind, eval_n, eval_x, eval_scaled, eval_format); });

    // grid
    auto* grid = app.add_subcommand("grid", "evaluate over a real grid");
    static FamilyOpts grid_fo;
    static std::string grid_kind = "standard", grid_format = "csv";
    static long grid_n = 0, grid_steps = 101;
    static double grid_min = -1.0, grid_max = 10.0;
    static bool grid_scaled = false;
    grid_fo.attach(grid);
    grid->add_option("--kind", grid_kind)->check(CLI::IsMember({"standard", "monic", "associated"}));
    grid->add_option("--n", grid_n)->required();
    grid->add_option("--x-min", grid_min);
    grid->add_option("--x-max", grid_max);
    grid->add_option("--steps", grid_steps, "grid points, >= 2");
    grid->add_flag("--scaled", grid_scaled);
    grid->add_option("--format", grid_format)->check(CLI::IsMember({"csv", "json"}));
    grid->callback([&] {
        rc = cmd_grid(grid_fo, grid_kind, grid_n, grid_min, grid_max, grid_steps, grid_scaled,
                      grid_format);
    });

    // figure
    auto* figure = app.add_subcommand(
        "figure", "scaled associated polynomial vs its limiting function, as CSV");
    static FamilyOpts figure_fo;
    static SeriesOpts figure_so;
    static std::string figure_preset;
    static long figure_n = 28, figure_steps = 551;
    static double figure_min = -1.0, figure_max = 10.0;
    figure->add_option("preset", figure_preset, "fig1 (Charlier) or fig2 (Meixner)")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2"}));
    figure_fo.attach(figure);
    figure->add_option("--n", figure_n, "polynomial index (default 28)");
    figure->add_option("--x-min", figure_min, "grid start (default -1)");
    figure->add_option("--x-max", figure_max, "grid end (default 10)");
    figure->add_option("--steps", figure_steps, "grid points (default 551)");
    figure_so.attach(figure);
    figure->callback([&] {
        rc = cmd_figure(figure_preset, figure_fo, figure_n, figure_min, figure_max, figure_steps,
                        figure_so);
    });

    // zeros
    auto* zeros = app.add_subcommand("zeros", "polynomial zeros vs limit-function zeros");
    static FamilyOpts zeros_fo;
    static std::string zeros_kind = "monic";
    static long zeros_n = 0;
    static std::vector<double> zeros_window = {0.0, 10.0};
    static double zeros_step = 0.05;
    zeros_fo.attach(zeros);
    zeros->add_option("--kind", zeros_kind)
        ->check(CLI::IsMember({"standard", "monic", "associated"}));
    zeros->add_option("--n", zeros_n)->required();
    zeros->add_option("--window", zeros_window, "limit-zero window lo,hi")
        ->delimiter(',')
        ->expected(2);
    zeros->add_option("--scan-step", zeros_step,
                      "bracketing scan step (close zero pairs need a finer step)");
    zeros->callback(
        [&] { rc = cmd_zeros(zeros_fo, zeros_kind, zeros_n, zeros_window, zeros_step); });

    // markov
    auto* markov = app.add_subcommand("markov", "Markov-ratio convergence to the Stieltjes transform");
    static FamilyOpts markov_fo;
    static std::string markov_z;
    static std::vector<long> markov_n_list;
    static SeriesOpts markov_so;
    markov_fo.attach(markov);
    markov_so.attach(markov);
    markov->add_option("--z", markov_z, "evaluation point off [0,inf), re or re,im")->required();
    markov->add_option("--n-list", markov_n_list, "polynomial indices")->delimiter(',');
    markov->callback([&] { rc = cmd_markov(markov_fo, markov_z, markov_n_list, markov_so); });

    // check
    auto* check = app.add_subcommand("check", "run the library invariant suites");
    static bool check_fault = false;
    check->add_flag("--inject-fault", check_fault,
                    "perturb a recurrence coefficient; the suite must then fail");
    check->callback([&] { rc = cmd_check(check_fault); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const non_convergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
