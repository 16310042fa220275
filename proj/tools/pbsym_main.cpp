#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "pbsym/errors.hpp"
#include "pbsym/report.hpp"
#include "pbsym/runner.hpp"
#include "pbsym/version.hpp"

namespace {

using namespace pbsym;

std::vector<std::pair<double, double>> parse_points(const std::string& text) {
    std::vector<std::pair<double, double>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find(';', start);
        std::string chunk =
            text.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
        if (!chunk.empty()) {
            std::size_t comma = chunk.find(',');
            if (comma == std::string::npos)
                throw config_error("points must be x,y pairs separated by ';'");
            try {
                out.emplace_back(std::stod(chunk.substr(0, comma)),
                                 std::stod(chunk.substr(comma + 1)));
            } catch (const std::exception&) {
                throw config_error("could not read point '" + chunk + "'");
            }
        }
        if (stop == std::string::npos) break;
        start = stop + 1;
    }
    if (out.empty()) throw config_error("no sample points given");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification engine for biorthogonal oscillator ladder families and the "
                 "deformed two/three-particle model"};
    app.set_version_flag("--version", pbsym::kVersion);
    app.require_subcommand(1);

    // Shared knobs live on the root so the config file stays a flat
    // key = value list and every subcommand accepts them after its name.
    std::string omega = "1", beta = "1/2", nu = "3/2", format = "json";
    int nvars = 2, nmax = 6, degmax = 8, cutoff = -12, quad_order = 40;
    unsigned long long seed = 12345;
    bool inject_fault = false;
    app.add_option("--omega", omega, "Frequency (rational, e.g. 1 or 4/3)")
        ->capture_default_str();
    app.add_option("--beta", beta, "Weight parameter, 0 < beta <= omega")->capture_default_str();
    app.add_option("--nu", nu, "Interaction coupling (rational, nu > 1/2)")
        ->capture_default_str();
    app.add_option("--n", nvars, "Number of variables (2 or 3)")->capture_default_str();
    app.add_option("--nmax", nmax, "Largest state index per mode")->capture_default_str();
    app.add_option("--degmax", degmax, "Largest polynomial degree exercised")
        ->capture_default_str();
    app.add_option("--cutoff", cutoff, "Truncation degree for graded series (negative)")
        ->capture_default_str();
    app.add_option("--quad-order", quad_order, "Quadrature order for the floating oracle")
        ->capture_default_str();
    app.add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();
    app.add_option("--format", format, "Report format: json | markdown")->capture_default_str();
    app.add_flag("--inject-fault", inject_fault)->group("");  // test hook, hidden
    app.set_config("--config", "", "Flat key = value configuration file");

    auto* verify = app.add_subcommand("verify", "Run a verification suite and report checks");
    verify->fallthrough();
    std::string model = "all";
    verify->add_option("model", model, "qho | calogero | all")->capture_default_str();

    auto* apply = app.add_subcommand("apply", "Apply an operator expression to an element");
    apply->fallthrough();
    std::string op_text, to_text, mode = "exact";
    apply->add_option("expression", op_text, "Operator expression, e.g. \"omega*OE - 1/2*OL\"")
        ->required();
    apply->add_option("--to", to_text, "Element literal, e.g. \"x1*x2\" or \"exp(-1/2, X2)\"")
        ->required();
    apply->add_option("--mode", mode, "exact | truncated")->capture_default_str();

    auto* comm = app.add_subcommand("commutators", "Commutation tables at pinned parameters");
    comm->fallthrough();

    auto* smoke =
        app.add_subcommand("kernel-smoke", "Partial sums of the reproducing-kernel identity "
                                           "(finiteness smoke test only)");
    smoke->fallthrough();
    int order = 20;
    std::string points = "0.5,-0.5;1.0,0.25;0.3,0.3";
    smoke->add_option("--order", order, "Partial-sum order (>= 5)")->capture_default_str();
    smoke->add_option("--points", points, "Sample points as \"x,y;x,y;...\"")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        SuiteConfig cfg;
        cfg.omega = parse_rational(omega);
        cfg.beta = parse_rational(beta);
        cfg.nu = parse_rational(nu);
        cfg.nvars = nvars;
        cfg.nmax = nmax;
        cfg.degmax = degmax;
        cfg.cutoff = cutoff;
        cfg.quad_order = quad_order;
        cfg.seed = seed;
        cfg.format = format;
        cfg.inject_fault = inject_fault;

        std::vector<Report> reports;
        if (*verify) {
            cfg.model = model;
            cfg.validate();
            reports = run_verify(cfg);
        } else if (*apply) {
            cfg.validate_basic();
            reports.push_back(run_apply(cfg, op_text, to_text, mode));
        } else if (*comm) {
            cfg.validate_basic();
            reports.push_back(run_commutator_suite(cfg));
        } else {
            cfg.validate_basic();
            reports.push_back(run_kernel_smoke(cfg, order, parse_points(points)));
        }

        std::cout << (cfg.format == "markdown" ? render_markdown(reports) : render_json(reports));
        for (const Report& r : reports)
            if (!r.all_passed()) return 1;
        return 0;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return 2;
    } catch (const value_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const engine_error& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return 1;
    }
}
