// Acceptance gate: one line per criterion, exact tolerances stated inline.
// Exit status 0 only if every criterion passes.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pbsym/calogero.hpp"
#include "pbsym/errors.hpp"
#include "pbsym/qho.hpp"
#include "pbsym/runner.hpp"

using namespace pbsym;

namespace {

int failures = 0;

void report(int index, bool ok, const std::string& label) {
    std::cout << "[" << std::setw(2) << index << "] " << (ok ? "PASS" : "FAIL") << " " << label
              << std::endl;
    if (!ok) ++failures;
}

double elapsed(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string secs(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << s << "s";
    return os.str();
}

// Wraps a criterion body so an unexpected engine error fails that criterion
// instead of aborting the gate.
void criterion(int index, const std::string& label, const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        bool ok = detail.rfind("OK", 0) == 0;
        report(index, ok, label + " -- " + detail);
    } catch (const engine_error& e) {
        report(index, false, label + " -- error: " + e.what());
    }
}

std::string check1_commutators() {
    auto start = std::chrono::steady_clock::now();
    SuiteConfig cfg;
    cfg.nvars = 2;
    Report two = run_commutator_suite(cfg);
    cfg.nvars = 3;
    Report three = run_commutator_suite(cfg);  // degree <= 8 span for the scaling family
    double dt = elapsed(start);
    if (two.fail_count() || three.fail_count()) {
        for (const Check& c : two.checks)
            if (c.status == CheckStatus::fail) return "residual at " + c.name + ": " + c.witness;
        for (const Check& c : three.checks)
            if (c.status == CheckStatus::fail) return "residual at " + c.name + ": " + c.witness;
    }
    if (dt >= 30.0) return "all residuals zero but runtime " + secs(dt) + " exceeds 30s";
    return "OK: zero residual at 3 ladder points (operator level) and 3 scaling points "
           "(operator level at N=2, degree-8 span at N=3) in " +
           secs(dt);
}

std::string check2_biorthogonality() {
    long entries = 0;
    for (Rational omega : {Rational(1), Rational(4)}) {
        for (Rational beta : {Rational(omega / 4), Rational(omega / 2), Rational(3 * omega / 4)}) {
            QhoSystem sys(omega, beta);
            std::vector<std::vector<Element>> first(7), second(7);
            for (int n1 = 0; n1 <= 6; ++n1)
                for (int n2 = 0; n2 <= 6; ++n2) {
                    first[n1].push_back(sys.first_state_closed(n1, n2));
                    second[n1].push_back(sys.second_state_closed(n1, n2));
                }
            for (int n1 = 0; n1 <= 6; ++n1)
                for (int n2 = 0; n2 <= 6; ++n2)
                    for (int m1 = 0; m1 <= 6; ++m1)
                        for (int m2 = 0; m2 <= 6; ++m2) {
                            RadScalar got = sys.pairing(second[n1][n2], first[m1][m2]);
                            RadScalar want((n1 == m1 && n2 == m2) ? 1 : 0);
                            ++entries;
                            if (got != want)
                                return "omega " + to_string(omega) + ", beta " + to_string(beta) +
                                       ", entry ((" + std::to_string(n1) + "," +
                                       std::to_string(n2) + "),(" + std::to_string(m1) + "," +
                                       std::to_string(m2) + ")) = " + got.str();
                        }
        }
    }
    return "OK: " + std::to_string(entries) + " Gram entries equal the identity exactly "
           "(49x49 per weight, beta in {w/4, w/2, 3w/4}, omega in {1, 4})";
}

std::string check3_spectra_intertwining() {
    for (Rational omega : {Rational(1), Rational(3)}) {
        QhoSystem sys(omega, omega / 2);
        DiffOp h = sys.shifted_hamiltonian();
        DiffOp hs = h.star(sys.weight_exponent());
        Element up = sys.metric_to_second();
        Element down = sys.metric_to_first();
        for (int n1 = 0; n1 <= 5; ++n1)
            for (int n2 = 0; n2 <= 5; ++n2) {
                Element phi = sys.first_state_closed(n1, n2);
                Element psi = sys.second_state_closed(n1, n2);
                RadScalar level(omega * (n1 + n2));
                std::string tag = "omega " + to_string(omega) + ", index (" +
                                  std::to_string(n1) + "," + std::to_string(n2) + ")";
                for (int j = 1; j <= 2; ++j) {
                    RadScalar mode(j == 1 ? n1 : n2);
                    if (sys.number(j).apply(phi) != phi.scaled(mode))
                        return "number spectrum fails at " + tag;
                    if (sys.number_star(j).apply(psi) != psi.scaled(mode))
                        return "starred number spectrum fails at " + tag;
                    if (sys.number(j).apply(phi) * up != sys.number_star(j).apply(phi * up))
                        return "multiplier does not intertwine number_" + std::to_string(j) +
                               " at " + tag;
                    if (sys.number(j).apply(psi * down) != sys.number_star(j).apply(psi) * down)
                        return "inverse multiplier does not intertwine number_" +
                               std::to_string(j) + " at " + tag;
                }
                if (h.apply(phi) != phi.scaled(level)) return "spectrum fails at " + tag;
                if (hs.apply(psi) != psi.scaled(level))
                    return "starred spectrum fails at " + tag;
                if (h.apply(phi) * up != hs.apply(phi * up))
                    return "multiplier does not intertwine the hamiltonian at " + tag;
            }
    }
    return "OK: spectra and multiplier intertwining have zero residual for all indices <= 5 "
           "at beta = omega/2, omega in {1, 3}";
}

std::string check4_gauge_identity() {
    struct Point { int n; Rational omega, nu; };
    for (const Point& pt : {Point{2, Rational(1), Rational(3, 2)},
                            Point{3, Rational(1), Rational(1)},
                            Point{2, Rational(2), Rational(5, 2)}}) {
        CalogeroModel model(pt.n, pt.omega, pt.nu);
        for (const Element& probe : gauge_probe_set(pt.n))
            if (model.gauge_conjugate(probe) != model.gauged_hamiltonian().apply(probe))
                return "gauge identity fails on probe " + probe.str() + " at N = " +
                       std::to_string(pt.n);
        Element ground = model.ground_state();
        if (model.hamiltonian().apply(ground) !=
            ground.scaled(RadScalar(model.ground_energy())))
            return "ground state eigencheck fails at N = " + std::to_string(pt.n);
        Rational want = pt.n == 2 ? pt.omega * (1 + 2 * pt.nu)
                                  : Rational(3) * pt.omega / 2 + 6 * pt.nu * pt.omega;
        if (model.ground_energy() != want)
            return "ground energy formula mismatch at N = " + std::to_string(pt.n);
    }
    return "OK: conjugation equals the gauged operator on all 10 probes (N = 2 and N = 3), "
           "with exact ground eigenvalue omega(1 + 2 nu) at N = 2 and the N(N-1) energy at N = 3";
}

std::string check5_eigenfamilies() {
    auto start = std::chrono::steady_clock::now();
    CalogeroModel model(2, 1, Rational(3, 2));
    for (int a = 0; 2 * a <= 10; ++a)
        for (int b = 0; 2 * a + 2 * b <= 10; ++b) {
            Element state = model.invariant_state(a, b);
            if (model.gauged_hamiltonian().apply(state) !=
                state.scaled(model.invariant_eigenvalue(a, b)))
                return "invariant eigencheck fails at (" + std::to_string(a) + "," +
                       std::to_string(b) + ")";
        }
    const int cutoff = -12;
    for (int n1 = 0; n1 <= 6; ++n1)
        for (int n2 = 0; n1 + n2 <= 6; ++n2) {
            GradedSeries state = model.truncated_state(n1, n2, cutoff);
            GradedSeries res = model.eigen_residual(state, RadScalar(Rational(n1 + n2)));
            if (res.valid_above() > cutoff || !res.is_zero_at_or_above(cutoff))
                return "truncated residual reaches degree >= -12 at (" + std::to_string(n1) +
                       "," + std::to_string(n2) + ")";
        }
    return "OK: exact eigenvalue omega(2a+2b) for all 2a+2b <= 10; all n1+n2 <= 6 residuals "
           "confined strictly below degree -12 (" + secs(elapsed(start)) + ")";
}

std::string check6_adjoint() {
    for (auto [omega, nu] : {std::pair<Rational, Rational>{1, Rational(3, 2)},
                             std::pair<Rational, Rational>{2, Rational(5, 2)}}) {
        CalogeroModel model(2, omega, nu);
        DiffOp defect = model.adjoint_defect();
        if (!defect.is_zero())
            return "defect at omega " + to_string(omega) + ", nu " + to_string(nu) + ": " +
                   defect.str();
    }
    return "OK: the unweighted adjoint matches the displayed closed form with zero residual "
           "at (1, 3/2) and (2, 5/2)";
}

std::string check7_ad_exponential() {
    for (auto [omega, nu] : {std::pair<Rational, Rational>{1, Rational(3, 2)},
                             std::pair<Rational, Rational>{2, Rational(5, 2)},
                             std::pair<Rational, Rational>{1, Rational(1)}}) {
        CalogeroModel model(2, omega, nu);
        RadScalar c(Rational(-1, 4) / omega);
        DiffOp conjugated =
            ad_exponential(c, model.deformed_laplacian(), model.euler().scaled(RadScalar(omega)));
        if (conjugated != model.gauged_hamiltonian())
            return "conjugation residual at omega " + to_string(omega) + ", nu " + to_string(nu);
    }
    return "OK: the flow conjugates omega OE onto the gauged hamiltonian through the "
           "two-term terminating series, exactly, at three parameter points";
}

std::string check8_pulled_back_structure() {
    auto start = std::chrono::steady_clock::now();
    for (Rational omega : {Rational(1), Rational(2)}) {
        CalogeroModel model(2, omega, Rational(3, 2));
        DiffOp expected = model.laplacian().scaled(RadScalar(Rational(-1, 2))) +
                          model.coord_square().scaled(RadScalar(omega * omega / 2)) -
                          DiffOp::identity(2).scaled(RadScalar(omega));
        if (model.conjugated_hamiltonian() != expected)
            return "pulled-back hamiltonian is not the oscillator form at omega " +
                   to_string(omega);

        Element vacuum = model.similarity_chain_exact(TSpaceVector::unit({0, 0}));
        if (vacuum != Element::one(2).scaled(RadScalar::sqrt_of(omega) * RadScalar::pi_pow(-1)))
            return "chain image of the vacuum is " + vacuum.str();

        std::vector<std::vector<Element>> basis(7);
        for (int n1 = 0; n1 <= 6; ++n1)
            for (int n2 = 0; n2 <= 6; ++n2)
                basis[n1].push_back(model.oscillator_state(n1, n2));
        for (int n1 = 0; n1 <= 6; ++n1)
            for (int n2 = 0; n2 <= 6; ++n2)
                for (int m1 = 0; m1 <= 6; ++m1)
                    for (int m2 = 0; m2 <= 6; ++m2) {
                        bool diag = n1 == m1 && n2 == m2;
                        RadScalar gram = inner_product_weighted(basis[n1][n2], basis[m1][m2], 0);
                        if (gram != RadScalar(diag ? 1 : 0))
                            return "pulled-back Gram entry not Kronecker at ((" +
                                   std::to_string(n1) + "," + std::to_string(n2) + "),(" +
                                   std::to_string(m1) + "," + std::to_string(m2) + "))";
                        RadScalar entry = inner_product_weighted(
                            basis[n1][n2], expected.apply(basis[m1][m2]), 0);
                        if (entry != RadScalar(diag ? omega * (n1 + n2) : Rational(0)))
                            return "hamiltonian matrix entry not diagonal at ((" +
                                   std::to_string(n1) + "," + std::to_string(n2) + "),(" +
                                   std::to_string(m1) + "," + std::to_string(m2) + "))";
                    }
    }
    return "OK: Gram of indices <= 6 is the identity, the gauged hamiltonian matrix is "
           "diag(omega(n1+n2)), and the chain maps the vacuum to sqrt(omega/pi), all exact (" +
           secs(elapsed(start)) + ")";
}

std::string check9_oracle() {
    auto start = std::chrono::steady_clock::now();
    long pairs = 0;
    double worst = 0;
    for (auto [omega, beta] : {std::pair<Rational, Rational>{1, Rational(1, 2)},
                               std::pair<Rational, Rational>{4, Rational(2)}}) {
        QhoSystem sys(omega, beta);
        for (int n1 = 0; n1 <= 3; ++n1)
            for (int n2 = 0; n2 <= 3; ++n2) {
                Element psi = sys.second_state_closed(n1, n2);
                for (int m1 = 0; m1 <= 3; ++m1)
                    for (int m2 = 0; m2 <= 3; ++m2) {
                        Element phi = sys.first_state_closed(m1, m2);
                        double exact = sys.pairing(psi, phi).to_double();
                        double approx = sys.pairing_oracle(psi, phi);
                        double rel = std::fabs(exact - approx) / std::max(1.0, std::fabs(exact));
                        worst = std::max(worst, rel);
                        ++pairs;
                        if (rel > 1e-10)
                            return "relative deviation " + std::to_string(rel) + " at ((" +
                                   std::to_string(n1) + "," + std::to_string(n2) + "),(" +
                                   std::to_string(m1) + "," + std::to_string(m2) + "))";
                    }
            }
    }
    double dt = elapsed(start);
    if (pairs < 200) return "only " + std::to_string(pairs) + " pairs checked";
    if (dt >= 60.0) return "agreement holds but runtime " + secs(dt) + " exceeds 60s";
    std::ostringstream os;
    os << "OK: " << pairs << " pairs agree within 1e-10 relative (worst " << std::scientific
       << std::setprecision(2) << worst << ") in " << secs(dt);
    return os.str();
}

std::string check10_determinism() {
    SuiteConfig cfg;
    cfg.nmax = 3;
    cfg.degmax = 4;
    cfg.cutoff = -8;
    cfg.quad_order = 24;
    std::string a = render_json(run_verify(cfg));
    std::string b = render_json(run_verify(cfg));
    if (a != b) return "verify reports differ between runs";
    std::vector<std::pair<double, double>> pts = {{0.5, -0.5}, {1.0, 0.25}};
    if (run_kernel_smoke(cfg, 20, pts).to_json() != run_kernel_smoke(cfg, 20, pts).to_json())
        return "kernel smoke reports differ between runs";
    if (run_commutator_suite(cfg).to_json() != run_commutator_suite(cfg).to_json())
        return "commutator reports differ between runs";
    return "OK: identical configurations render byte-identical JSON report bodies";
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    std::cout << "acceptance gate: exact-identity and oracle criteria\n";

    criterion(1, "commutator tables at pinned parameter points", check1_commutators);
    criterion(2, "biorthogonality Gram matrices (exact equality)", check2_biorthogonality);
    criterion(3, "ladder spectra and multiplier intertwining (exact)", check3_spectra_intertwining);
    criterion(4, "gauge identity and ground-state energies (exact)", check4_gauge_identity);
    criterion(5, "invariant and truncated eigenfamilies", check5_eigenfamilies);
    criterion(6, "adjoint closed form (exact)", check6_adjoint);
    criterion(7, "flow conjugation of the scaled Euler operator (exact)", check7_ad_exponential);
    criterion(8, "pulled-back inner-product structure (exact)", check8_pulled_back_structure);
    criterion(9, "exact vs quadrature oracle (1e-10 relative, >= 200 pairs)", check9_oracle);
    criterion(10, "byte-identical reports for identical configurations", check10_determinism);

    std::cout << "acceptance: " << (10 - failures) << "/10 passed in " << secs(elapsed(start))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
