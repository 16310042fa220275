#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pbsym/rational.hpp"
#include "pbsym/report.hpp"

namespace pbsym {

// One flat bag of knobs shared by every suite; the CLI mirrors each field as
// a flag and as a `key = value` config-file entry. A fixed seed makes the
// sampled checks, and therefore the rendered report, byte-reproducible.
struct SuiteConfig {
    std::string model = "all";  // qho | calogero | all
    Rational omega = Rational(1);
    Rational beta = Rational(1, 2);
    Rational nu = Rational(3, 2);
    int nvars = 2;
    int nmax = 6;
    int degmax = 8;
    int cutoff = -12;
    int quad_order = 40;
    unsigned long long seed = 12345;
    std::string format = "json";  // json | markdown
    bool inject_fault = false;    // perturb a drift coefficient (test hook)

    void validate() const;        // full check for verify runs; throws config_error
    void validate_basic() const;  // shared bounds for the other subcommands
};

// Ladder/biorthogonality/intertwining family at (omega, beta).
Report run_qho_suite(const SuiteConfig& cfg);

// Gauge chain, eigenfamilies, adjoint and ladder structure at (omega, nu).
Report run_calogero_suite(const SuiteConfig& cfg);

// The suites selected by cfg.model, in fixed order.
std::vector<Report> run_verify(const SuiteConfig& cfg);

// Commutation tables for both families at the pinned parameter points;
// operator-level for two variables, monomial-span for three.
Report run_commutator_suite(const SuiteConfig& cfg);

// Partial sums of the Hermite reproducing sum at off-diagonal points:
// finiteness and decay statistics only, no algebraic content.
Report run_kernel_smoke(const SuiteConfig& cfg, int order,
                        const std::vector<std::pair<double, double>>& points);

// Parses and applies an operator expression to an element literal; the
// rendered image is reported as the check witness.
Report run_apply(const SuiteConfig& cfg, const std::string& op_text,
                 const std::string& elem_text, const std::string& mode);

}
