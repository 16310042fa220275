#include "pbsym/runner.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "pbsym/calogero.hpp"
#include "pbsym/errors.hpp"
#include "pbsym/opdsl.hpp"
#include "pbsym/qho.hpp"

namespace pbsym {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Runs one check body; the body returns an empty string to pass and a witness
// to fail. Engine errors become failures with the message as witness, so a
// broken identity never aborts the rest of the suite.
void run_check(Report& rep, const std::string& name, const std::function<std::string()>& body) {
    try {
        std::string witness = body();
        rep.record(name, witness.empty(), witness);
    } catch (const engine_error& e) {
        rep.add_fail(name, e.what());
    }
}

std::string check_equal(const Element& got, const Element& want, const std::string& label) {
    if (got == want) return "";
    return label + ": got " + got.str() + ", want " + want.str();
}

// Positive, pi-free, single-radical value squared to a rational, so exact
// order comparisons reduce to rational ones.
Rational square_of_positive(const RadScalar& v) {
    if (v.terms().size() != 1) throw value_error("expected a single radical term");
    const auto& [key, coeff] = *v.terms().begin();
    if (key.pi_half != 0) throw value_error("expected a pi-free value");
    if (coeff <= 0) throw value_error("expected a positive value");
    return coeff * coeff * Rational(key.radicand);
}

DiffOp perturb_drift(const DiffOp& op) {
    // The documented fault hook: bump one drift coefficient by x1/7 d1.
    int nv = op.nvars();
    DerivIndex d1(nv, 0);
    d1[0] = 1;
    return op + DiffOp::term(Element::variable(nv, 1).scaled(RadScalar(Rational(1, 7))), d1);
}

// ---------------------------------------------------------------------------
// qho suite pieces
// ---------------------------------------------------------------------------

std::string qho_ladder_table(const QhoSystem& sys) {
    DiffOp id = DiffOp::identity(2);
    for (int j = 1; j <= 2; ++j)
        for (int k = 1; k <= 2; ++k) {
            DiffOp mixed = commutator(sys.lowering(j), sys.raising(k));
            if (j == k) mixed = mixed - id;
            if (!mixed.is_zero())
                return "[lowering_" + std::to_string(j) + ", raising_" + std::to_string(k) +
                       "] residual: " + mixed.str();
            DiffOp low = commutator(sys.lowering(j), sys.lowering(k));
            if (!low.is_zero()) return "[lowering, lowering] residual: " + low.str();
            DiffOp high = commutator(sys.raising(j), sys.raising(k));
            if (!high.is_zero()) return "[raising, raising] residual: " + high.str();
            DiffOp starred = commutator(sys.raising_star(k), sys.lowering_star(j));
            if (j == k) starred = starred - id;
            if (!starred.is_zero())
                return "[raising_star_" + std::to_string(k) + ", lowering_star_" +
                       std::to_string(j) + "] residual: " + starred.str();
        }
    return "";
}

Report qho_suite(const SuiteConfig& cfg) {
    Report rep;
    rep.suite = "qho";
    rep.add_param("omega", to_string(cfg.omega));
    rep.add_param("beta", to_string(cfg.beta));
    rep.add_param("nmax", std::to_string(cfg.nmax));
    rep.add_param("quad-order", std::to_string(cfg.quad_order));
    rep.add_param("seed", std::to_string(cfg.seed));

    QhoSystem sys(cfg.omega, cfg.beta);
    bool midpoint = cfg.beta * 2 == cfg.omega;
    int nmax = cfg.nmax;

    run_check(rep, "ladder-commutators", [&] { return qho_ladder_table(sys); });

    run_check(rep, "vacuum-annihilation", [&] {
        Element phi0 = sys.first_state_closed(0, 0);
        Element psi0 = sys.second_state_closed(0, 0);
        for (int j = 1; j <= 2; ++j) {
            Element a = sys.lowering(j).apply(phi0);
            if (!a.is_zero()) return "lowering_" + std::to_string(j) + " image: " + a.str();
            Element b = sys.raising_star(j).apply(psi0);
            if (!b.is_zero()) return "raising_star_" + std::to_string(j) + " image: " + b.str();
        }
        RadScalar pv = sys.pairing(psi0, phi0);
        if (pv != RadScalar(1)) return "vacuum pairing = " + pv.str();
        return std::string();
    });

    run_check(rep, "ladder-equals-closed-form", [&] {
        for (int n1 = 0; n1 <= nmax; ++n1)
            for (int n2 = 0; n2 <= nmax; ++n2) {
                std::string tag = "(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
                std::string w = check_equal(sys.first_state(n1, n2),
                                            sys.first_state_closed(n1, n2), "first " + tag);
                if (!w.empty()) return w;
                w = check_equal(sys.second_state(n1, n2), sys.second_state_closed(n1, n2),
                                "second " + tag);
                if (!w.empty()) return w;
            }
        return std::string();
    });

    run_check(rep, "biorthogonality-gram", [&] {
        for (int n1 = 0; n1 <= nmax; ++n1)
            for (int n2 = 0; n2 <= nmax; ++n2) {
                Element psi = sys.second_state_closed(n1, n2);
                for (int m1 = 0; m1 <= nmax; ++m1)
                    for (int m2 = 0; m2 <= nmax; ++m2) {
                        RadScalar got = sys.pairing(psi, sys.first_state_closed(m1, m2));
                        RadScalar want((n1 == m1 && n2 == m2) ? 1 : 0);
                        if (got != want)
                            return "entry ((" + std::to_string(n1) + "," + std::to_string(n2) +
                                   "),(" + std::to_string(m1) + "," + std::to_string(m2) +
                                   ")) = " + got.str();
                    }
            }
        return std::string();
    });

    run_check(rep, "ladder-spectra", [&] {
        DiffOp h = sys.shifted_hamiltonian();
        DiffOp hs = h.star(sys.weight_exponent());
        for (int n1 = 0; n1 <= nmax; ++n1)
            for (int n2 = 0; n2 <= nmax; ++n2) {
                Element phi = sys.first_state_closed(n1, n2);
                Element psi = sys.second_state_closed(n1, n2);
                RadScalar level(cfg.omega * (n1 + n2));
                std::string tag = "(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
                for (int j = 1; j <= 2; ++j) {
                    RadScalar mode(j == 1 ? n1 : n2);
                    std::string w = check_equal(sys.number(j).apply(phi), phi.scaled(mode),
                                                "number_" + std::to_string(j) + " on first " + tag);
                    if (!w.empty()) return w;
                    w = check_equal(sys.number_star(j).apply(psi), psi.scaled(mode),
                                    "number_star_" + std::to_string(j) + " on second " + tag);
                    if (!w.empty()) return w;
                }
                std::string w =
                    check_equal(h.apply(phi), phi.scaled(level), "hamiltonian on first " + tag);
                if (!w.empty()) return w;
                w = check_equal(hs.apply(psi), psi.scaled(level),
                                "starred hamiltonian on second " + tag);
                if (!w.empty()) return w;
            }
        return std::string();
    });

    if (!midpoint) {
        rep.add_skip("metric-intertwining", "multiplier metric requires beta = omega/2");
        rep.add_skip("metric-exchange", "multiplier metric requires beta = omega/2");
        rep.add_skip("midpoint-chain", "orthonormal link basis requires beta = omega/2");
    } else {
        run_check(rep, "metric-intertwining", [&] {
            Element up = sys.metric_to_second();
            Element down = sys.metric_to_first();
            DiffOp h = sys.shifted_hamiltonian();
            DiffOp hs = h.star(sys.weight_exponent());
            int top = std::min(nmax, 4);
            for (int n1 = 0; n1 <= top; ++n1)
                for (int n2 = 0; n2 <= top; ++n2) {
                    Element phi = sys.first_state_closed(n1, n2);
                    Element psi = sys.second_state_closed(n1, n2);
                    std::string tag = "(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
                    for (int j = 1; j <= 2; ++j) {
                        std::string w = check_equal(
                            sys.number(j).apply(phi) * up, sys.number_star(j).apply(phi * up),
                            "metric vs number_" + std::to_string(j) + " at " + tag);
                        if (!w.empty()) return w;
                        w = check_equal(sys.number(j).apply(psi * down),
                                        sys.number_star(j).apply(psi) * down,
                                        "number_" + std::to_string(j) + " vs metric at " + tag);
                        if (!w.empty()) return w;
                    }
                    std::string w =
                        check_equal(h.apply(phi) * up, hs.apply(phi * up),
                                    "metric vs hamiltonian at " + tag);
                    if (!w.empty()) return w;
                }
            return std::string();
        });

        run_check(rep, "metric-exchange", [&] {
            Element up = sys.metric_to_second();
            Element down = sys.metric_to_first();
            int top = std::min(nmax, 5);
            for (int n1 = 0; n1 <= top; ++n1)
                for (int n2 = 0; n2 <= top; ++n2) {
                    Element phi = sys.first_state_closed(n1, n2);
                    Element psi = sys.second_state_closed(n1, n2);
                    std::string tag = "(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
                    std::string w = check_equal(psi * down, phi, "second to first at " + tag);
                    if (!w.empty()) return w;
                    w = check_equal(phi * up, psi, "first to second at " + tag);
                    if (!w.empty()) return w;
                    w = check_equal(phi * up * down, phi, "round trip at " + tag);
                    if (!w.empty()) return w;
                }
            return std::string();
        });

        run_check(rep, "midpoint-chain", [&] {
            Element mult = sys.midpoint_multiplier();
            int top = std::min(nmax, 4);
            for (int n1 = 0; n1 <= top; ++n1)
                for (int n2 = 0; n2 <= top; ++n2) {
                    Element e = sys.midpoint_basis(n1, n2);
                    std::string tag = "(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
                    std::string w =
                        check_equal(mult * e, sys.first_state_closed(n1, n2), "T e at " + tag);
                    if (!w.empty()) return w;
                    w = check_equal(e.shift_gamma(cfg.omega / 4),
                                    sys.second_state_closed(n1, n2), "T^-1 e at " + tag);
                    if (!w.empty()) return w;
                    for (int m1 = 0; m1 <= top; ++m1)
                        for (int m2 = 0; m2 <= top; ++m2) {
                            RadScalar got = sys.pairing(e, sys.midpoint_basis(m1, m2));
                            RadScalar want((n1 == m1 && n2 == m2) ? 1 : 0);
                            if (got != want)
                                return "link Gram entry (" + tag + ",(" + std::to_string(m1) +
                                       "," + std::to_string(m2) + ")) = " + got.str();
                        }
                }
            return std::string();
        });
    }

    run_check(rep, "finite-reconstruction", [&] {
        std::mt19937_64 rng(cfg.seed);
        int top = std::min(nmax, 3);
        for (int round = 0; round < 2; ++round) {
            std::vector<std::pair<std::pair<int, int>, RadScalar>> combo;
            Element f = Element::zero(2);
            for (int n1 = 0; n1 <= top; ++n1)
                for (int n2 = 0; n2 <= top; ++n2) {
                    Rational c(static_cast<long long>(rng() % 7) - 3,
                               1 + static_cast<long long>(rng() % 3));
                    if (c == 0) continue;
                    combo.push_back({{n1, n2}, RadScalar(c)});
                    f = f + sys.first_state_closed(n1, n2).scaled(RadScalar(c));
                }
            Element rebuilt = Element::zero(2);
            for (int n1 = 0; n1 <= top; ++n1)
                for (int n2 = 0; n2 <= top; ++n2)
                    rebuilt = rebuilt + sys.first_state_closed(n1, n2).scaled(
                                            sys.pairing(sys.second_state_closed(n1, n2), f));
            std::string w = check_equal(rebuilt, f, "first-family expansion");
            if (!w.empty()) return w;

            Element g = Element::zero(2);
            for (const auto& [index, c] : combo)
                g = g + sys.second_state_closed(index.first, index.second).scaled(c);
            Element rebuilt2 = Element::zero(2);
            for (int n1 = 0; n1 <= top; ++n1)
                for (int n2 = 0; n2 <= top; ++n2)
                    rebuilt2 = rebuilt2 + sys.second_state_closed(n1, n2).scaled(
                                              sys.pairing(sys.first_state_closed(n1, n2), g));
            w = check_equal(rebuilt2, g, "second-family expansion");
            if (!w.empty()) return w;
        }
        return std::string();
    });

    if (cfg.beta == cfg.omega) {
        rep.add_skip("non-regularity-ratio",
                     "the two families coincide at beta = omega (regular case)");
    } else {
        run_check(rep, "non-regularity-ratio", [&] {
            Rational prev(-1);
            for (int n = 0; n <= 8; ++n) {
                Element phi = sys.first_state_closed(n, n);
                Element psi = sys.second_state_closed(n, n);
                RadScalar ratio = sys.pairing(psi, psi) * sys.pairing(phi, phi).inverse();
                Rational sq = square_of_positive(ratio);
                if (sq <= prev)
                    return "norm ratio squared at n = " + std::to_string(n) + " is " +
                           to_string(sq) + ", not above " + to_string(prev);
                prev = sq;
            }
            return std::string();
        });
    }

    run_check(rep, "oracle-agreement", [&] {
        int top = std::min(nmax, 3);
        for (int n1 = 0; n1 <= top; ++n1)
            for (int n2 = 0; n2 <= top; ++n2) {
                Element psi = sys.second_state_closed(n1, n2);
                for (int m1 = 0; m1 <= top; ++m1)
                    for (int m2 = 0; m2 <= top; ++m2) {
                        Element phi = sys.first_state_closed(m1, m2);
                        double exact = sys.pairing(psi, phi).to_double();
                        double approx = sys.pairing_oracle(psi, phi, cfg.quad_order);
                        double scale = std::max(1.0, std::fabs(exact));
                        if (std::fabs(exact - approx) / scale > 1e-10)
                            return "pair ((" + std::to_string(n1) + "," + std::to_string(n2) +
                                   "),(" + std::to_string(m1) + "," + std::to_string(m2) +
                                   ")): exact " + fmt(exact) + " vs quadrature " + fmt(approx);
                    }
            }
        return std::string();
    });

    return rep;
}

// ---------------------------------------------------------------------------
// calogero suite pieces
// ---------------------------------------------------------------------------

std::string commutation_table(const CalogeroModel& model, const DiffOp& ol, int span_degmax) {
    int nv = model.nvars();
    const DiffOp& oe = model.euler();
    const DiffOp& lap = model.laplacian();
    const DiffOp& x2 = model.coord_square();
    DiffOp id = DiffOp::identity(nv);
    std::vector<std::pair<std::string, DiffOp>> residuals;
    residuals.emplace_back("[OL, OE] - 2 OL", commutator(ol, oe) - ol.scaled(RadScalar(2)));
    residuals.emplace_back("[OE, X2] - 2 X2", commutator(oe, x2) - x2.scaled(RadScalar(2)));
    residuals.emplace_back("[LAP, OE] - 2 LAP", commutator(lap, oe) - lap.scaled(RadScalar(2)));
    residuals.emplace_back("[LAP, X2] - 4 OE - 2N",
                           commutator(lap, x2) - oe.scaled(RadScalar(4)) -
                               id.scaled(RadScalar(2 * nv)));
    if (nv == 2) {
        for (const auto& [label, res] : residuals)
            if (!res.is_zero()) return label + " = " + res.str();
        return "";
    }
    std::vector<Element> span = monomial_span(nv, span_degmax);
    DiffOp zero(nv);
    for (const auto& [label, res] : residuals) {
        SpanComparison cmp = equal_on_span(res, zero, span);
        if (!cmp.equal) return label + " on span: " + cmp.witness;
    }
    return "";
}

Report calogero_suite(const SuiteConfig& cfg) {
    Report rep;
    rep.suite = "calogero";
    rep.add_param("omega", to_string(cfg.omega));
    rep.add_param("nu", to_string(cfg.nu));
    rep.add_param("n", std::to_string(cfg.nvars));
    rep.add_param("degmax", std::to_string(cfg.degmax));
    rep.add_param("cutoff", std::to_string(cfg.cutoff));

    CalogeroModel model(cfg.nvars, cfg.omega, cfg.nu);
    bool planar = cfg.nvars == 2;

    run_check(rep, "commutation-table", [&] {
        DiffOp ol = model.deformed_laplacian();
        if (cfg.inject_fault) ol = perturb_drift(ol);
        return commutation_table(model, ol, std::min(cfg.degmax, 8));
    });

    run_check(rep, "ground-state-energy", [&] {
        Element ground = model.ground_state();
        Element image = model.hamiltonian().apply(ground);
        Element want = ground.scaled(RadScalar(model.ground_energy()));
        std::string w = check_equal(image, want, "hamiltonian on the ground state");
        if (!w.empty()) return w + " (expected energy " + to_string(model.ground_energy()) + ")";
        return std::string();
    });

    run_check(rep, "gauge-conjugation", [&] {
        for (const Element& probe : gauge_probe_set(cfg.nvars)) {
            std::string w = check_equal(model.gauge_conjugate(probe),
                                        model.gauged_hamiltonian().apply(probe),
                                        "probe " + probe.str());
            if (!w.empty()) return w;
        }
        return std::string();
    });

    run_check(rep, "adjoint-identity", [&] {
        if (!planar) return std::string();  // defect formula is the two-variable display
        DiffOp defect = model.adjoint_defect();
        if (!defect.is_zero()) return "defect = " + defect.str();
        return std::string();
    });

    run_check(rep, "ad-exponential-identity", [&] {
        RadScalar c = RadScalar(Rational(-1, 4) / cfg.omega);
        DiffOp conjugated = ad_exponential(c, model.deformed_laplacian(),
                                           model.euler().scaled(RadScalar(cfg.omega)));
        DiffOp res = conjugated - model.gauged_hamiltonian();
        if (!res.is_zero()) return "residual = " + res.str();
        DiffOp back = ad_exponential(-c, model.deformed_laplacian(), model.gauged_hamiltonian());
        res = back - model.euler().scaled(RadScalar(cfg.omega));
        if (!res.is_zero()) return "inverse direction residual = " + res.str();
        return std::string();
    });

    if (!planar) {
        rep.add_skip("invariant-eigenfamily", "flow closure is a two-variable construction");
        rep.add_skip("truncated-eigenfamily", "flow closure is a two-variable construction");
        rep.add_skip("oscillator-structure", "similarity chain is a two-variable construction");
        rep.add_skip("similarity-chain", "similarity chain is a two-variable construction");
        rep.add_skip("conjugated-ladder", "similarity chain is a two-variable construction");
        return rep;
    }

    run_check(rep, "invariant-eigenfamily", [&] {
        for (int a = 0; 2 * a <= cfg.degmax; ++a)
            for (int b = 0; 2 * a + 2 * b <= cfg.degmax; ++b) {
                Element state = model.invariant_state(a, b);
                Element image = model.gauged_hamiltonian().apply(state);
                std::string w = check_equal(image, state.scaled(model.invariant_eigenvalue(a, b)),
                                            "index (" + std::to_string(a) + "," +
                                                std::to_string(b) + ")");
                if (!w.empty()) return w;
            }
        return std::string();
    });

    run_check(rep, "truncated-eigenfamily", [&] {
        int top = std::min(cfg.degmax, 6);
        for (int n1 = 0; n1 <= top; ++n1)
            for (int n2 = 0; n1 + n2 <= top; ++n2) {
                GradedSeries state = model.truncated_state(n1, n2, cfg.cutoff);
                GradedSeries res =
                    model.eigen_residual(state, RadScalar(cfg.omega * (n1 + n2)));
                std::string tag =
                    "(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
                if (res.valid_above() > cfg.cutoff)
                    return "index " + tag + ": validity window collapsed to " +
                           std::to_string(res.valid_above());
                if (!res.is_zero_at_or_above(cfg.cutoff))
                    return "index " + tag + ": residual above cutoff: " + res.str();
            }
        return std::string();
    });

    run_check(rep, "oscillator-structure", [&] {
        DiffOp expected = model.laplacian().scaled(RadScalar(Rational(-1, 2))) +
                          model.coord_square().scaled(RadScalar(cfg.omega * cfg.omega / 2)) -
                          DiffOp::identity(2).scaled(RadScalar(cfg.omega));
        DiffOp got = model.conjugated_hamiltonian();
        if (got != expected) return "conjugated hamiltonian = " + got.str();

        int top = std::min(cfg.nmax, 4);
        for (int n1 = 0; n1 <= top; ++n1)
            for (int n2 = 0; n2 <= top; ++n2) {
                Element fn = model.oscillator_state(n1, n2);
                for (int m1 = 0; m1 <= top; ++m1)
                    for (int m2 = 0; m2 <= top; ++m2) {
                        Element fm = model.oscillator_state(m1, m2);
                        bool diag = n1 == m1 && n2 == m2;
                        RadScalar gram = inner_product_weighted(fn, fm, 0);
                        if (gram != RadScalar(diag ? 1 : 0))
                            return "Gram entry ((" + std::to_string(n1) + "," +
                                   std::to_string(n2) + "),(" + std::to_string(m1) + "," +
                                   std::to_string(m2) + ")) = " + gram.str();
                        RadScalar entry = inner_product_weighted(fn, got.apply(fm), 0);
                        RadScalar want(diag ? cfg.omega * (n1 + n2) : Rational(0));
                        if (entry != want)
                            return "hamiltonian entry ((" + std::to_string(n1) + "," +
                                   std::to_string(n2) + "),(" + std::to_string(m1) + "," +
                                   std::to_string(m2) + ")) = " + entry.str();
                    }
            }
        return std::string();
    });

    run_check(rep, "similarity-chain", [&] {
        RadScalar base = RadScalar::sqrt_of(cfg.omega) * RadScalar::pi_pow(-1);
        Element got = model.similarity_chain_exact(TSpaceVector::unit({0, 0}));
        std::string w = check_equal(got, Element::one(2).scaled(base), "vacuum image");
        if (!w.empty()) return w;

        Element pair = model.similarity_chain_exact(TSpaceVector::unit({1, 1}));
        Element p = Element::variable(2, 1) * Element::variable(2, 2);
        w = check_equal(pair, p.scaled(base * RadScalar(2 * cfg.omega)), "index (1,1) image");
        if (!w.empty()) return w;
        Element image = model.gauged_hamiltonian().apply(pair);
        w = check_equal(image, pair.scaled(RadScalar(2 * cfg.omega)), "index (1,1) eigencheck");
        if (!w.empty()) return w;

        GradedSeries chain =
            model.similarity_chain_truncated(TSpaceVector::unit({2, 0}), cfg.cutoff);
        GradedSeries flow = model.truncated_state(2, 0, cfg.cutoff)
                                .scaled(base * RadScalar::sqrt_of(2 * cfg.omega * cfg.omega));
        for (int d = cfg.cutoff; d <= 2; ++d) {
            w = check_equal(chain.component(d), flow.component(d),
                            "index (2,0) chain component at degree " + std::to_string(d));
            if (!w.empty()) return w;
        }
        return std::string();
    });

    run_check(rep, "conjugated-ladder", [&] {
        Element s = Element::variable(2, 1) * Element::variable(2, 1) +
                    Element::variable(2, 2) * Element::variable(2, 2);
        Element p = Element::variable(2, 1) * Element::variable(2, 2);
        std::vector<Element> probes = {Element::one(2), p, s};
        int wide = cfg.cutoff - 4;
        for (const Element& probe : probes) {
            GradedSeries start = homogeneous_components(probe, wide);
            for (int j = 1; j <= 2; ++j)
                for (int k = 1; k <= 2; ++k) {
                    GradedSeries ab = model.conjugated_lowering(j, model.conjugated_raising(k, start));
                    GradedSeries ba = model.conjugated_raising(k, model.conjugated_lowering(j, start));
                    GradedSeries res = ab - ba;
                    if (j == k) res = res - start;
                    if (!res.is_zero_at_or_above(cfg.cutoff))
                        return "[lowering_" + std::to_string(j) + ", raising_" +
                               std::to_string(k) + "] on " + probe.str() +
                               " leaves residual " + res.str();
                }
            GradedSeries sum(2, wide);
            for (int j = 1; j <= 2; ++j)
                sum = sum + model.conjugated_raising(j, model.conjugated_lowering(j, start));
            GradedSeries res = sum.scaled(RadScalar(cfg.omega)) -
                               model.gauged_hamiltonian().apply(start);
            if (!res.is_zero_at_or_above(cfg.cutoff))
                return "omega sum raising.lowering vs gauged hamiltonian on " + probe.str() +
                       ": " + res.str();
        }
        return std::string();
    });

    return rep;
}

}  // namespace

void SuiteConfig::validate_basic() const {
    if (omega <= 0) throw config_error("omega must be positive");
    if (nvars != 2 && nvars != 3) throw config_error("n must be 2 or 3");
    if (cutoff >= 0 || cutoff < -64) throw config_error("cutoff must lie in -64..-1");
    if (quad_order < 2 || quad_order > 200) throw config_error("quad order must lie in 2..200");
    if (format != "json" && format != "markdown")
        throw config_error("format must be json or markdown");
}

void SuiteConfig::validate() const {
    validate_basic();
    if (model != "qho" && model != "calogero" && model != "all")
        throw config_error("model must be qho, calogero, or all");
    if (model != "calogero") {
        if (beta <= 0 || beta > omega) throw config_error("beta must satisfy 0 < beta <= omega");
    }
    if (model != "qho") {
        if (2 * nu <= 1) throw config_error("nu must exceed 1/2");
    }
    if (nmax < 1 || nmax > 8) throw config_error("nmax must lie in 1..8");
    if (degmax < 0 || degmax > 12) throw config_error("degmax must lie in 0..12");
}

Report run_qho_suite(const SuiteConfig& cfg) { return qho_suite(cfg); }

Report run_calogero_suite(const SuiteConfig& cfg) { return calogero_suite(cfg); }

std::vector<Report> run_verify(const SuiteConfig& cfg) {
    std::vector<Report> out;
    if (cfg.model == "qho" || cfg.model == "all") out.push_back(run_qho_suite(cfg));
    if (cfg.model == "calogero" || cfg.model == "all") out.push_back(run_calogero_suite(cfg));
    return out;
}

Report run_commutator_suite(const SuiteConfig& cfg) {
    Report rep;
    rep.suite = "commutators";
    rep.add_param("n", std::to_string(cfg.nvars));

    const std::vector<std::pair<Rational, Rational>> qho_points = {
        {Rational(1), Rational(1, 2)}, {Rational(4), Rational(2)}, {Rational(2), Rational(3, 2)}};
    for (const auto& [omega, beta] : qho_points) {
        std::string name = "qho-ladder-omega-" + to_string(omega) + "-beta-" + to_string(beta);
        run_check(rep, name, [&, omega = omega, beta = beta] {
            return qho_ladder_table(QhoSystem(omega, beta));
        });
    }

    const std::vector<std::pair<Rational, Rational>> cal_points = {
        {Rational(1), Rational(3, 2)}, {Rational(2), Rational(5, 2)}, {Rational(1), Rational(1)}};
    for (const auto& [omega, nu] : cal_points) {
        std::string name = "calogero-scaling-omega-" + to_string(omega) + "-nu-" + to_string(nu);
        run_check(rep, name, [&, omega = omega, nu = nu] {
            CalogeroModel model(cfg.nvars, omega, nu);
            DiffOp ol = model.deformed_laplacian();
            if (cfg.inject_fault) ol = perturb_drift(ol);
            return commutation_table(model, ol, 8);
        });
    }
    return rep;
}

Report run_kernel_smoke(const SuiteConfig& cfg, int order,
                        const std::vector<std::pair<double, double>>& points) {
    if (order < 5) throw config_error("kernel smoke order must be at least 5");
    Report rep;
    rep.suite = "kernel-smoke";
    rep.add_param("omega", to_string(cfg.omega));
    rep.add_param("order", std::to_string(order));
    rep.add_param("note", "distributional identity / smoke test only; finiteness is the only "
                          "pass criterion");

    double scale = std::sqrt(to_double(cfg.omega));
    int index = 0;
    for (const auto& [x, y] : points) {
        ++index;
        std::string name = "point-" + std::to_string(index);
        if (x == y) {
            rep.add_skip(name, "x = y = " + fmt(x) + ": on-diagonal point excluded "
                               "(delta singularity)");
            continue;
        }
        // Terms of the reproducing sum via the orthonormal recurrence:
        // H_k(x) H_k(y) / (2^k k!) = sqrt(pi) p_k(x) p_k(y) with
        // p_0 = pi^{-1/4}, p_{k+1} = x sqrt(2/(k+1)) p_k - sqrt(k/(k+1)) p_{k-1}.
        double tx = scale * x, ty = scale * y;
        double px = std::pow(M_PI, -0.25), py = px, px_prev = 0, py_prev = 0;
        double sum = 0, sum_low = 0, max_term = 0, last_term = 0;
        int flips = 0;
        double prev_term = 0;
        for (int k = 0; k <= order; ++k) {
            double term = std::sqrt(M_PI) * px * py;
            sum += term;
            if (k == 5) sum_low = sum;
            max_term = std::max(max_term, std::fabs(term));
            if (k > 0 && term * prev_term < 0) ++flips;
            prev_term = term;
            last_term = term;
            double cx = tx * std::sqrt(2.0 / (k + 1)) * px - std::sqrt(double(k) / (k + 1)) * px_prev;
            double cy = ty * std::sqrt(2.0 / (k + 1)) * py - std::sqrt(double(k) / (k + 1)) * py_prev;
            px_prev = px;
            py_prev = py;
            px = cx;
            py = cy;
        }
        bool finite = std::isfinite(sum) && std::isfinite(sum_low);
        std::string stats = "x = " + fmt(x) + ", y = " + fmt(y) + ": sum(K=5) = " + fmt(sum_low) +
                            ", sum(K=" + std::to_string(order) + ") = " + fmt(sum) +
                            ", max|term| = " + fmt(max_term) + ", last term = " + fmt(last_term) +
                            ", sign flips = " + std::to_string(flips);
        if (finite) {
            Check c;
            c.name = name;
            c.status = CheckStatus::pass;
            c.witness = stats;
            rep.checks.push_back(std::move(c));
        } else {
            rep.add_fail(name, stats);
        }
    }
    return rep;
}

Report run_apply(const SuiteConfig& cfg, const std::string& op_text,
                 const std::string& elem_text, const std::string& mode) {
    if (mode != "exact" && mode != "truncated")
        throw config_error("mode must be exact or truncated");
    Report rep;
    rep.suite = "apply";
    rep.add_param("operator", op_text);
    rep.add_param("to", elem_text);
    rep.add_param("mode", mode);
    rep.add_param("omega", to_string(cfg.omega));
    rep.add_param("nu", to_string(cfg.nu));
    rep.add_param("n", std::to_string(cfg.nvars));
    if (mode == "truncated") rep.add_param("cutoff", std::to_string(cfg.cutoff));

    EvalContext ctx(cfg.nvars, cfg.omega, cfg.nu);
    OpAst ast = parse_opdsl(op_text, cfg.nvars);
    {
        Check c;
        c.name = "parse";
        c.status = CheckStatus::pass;
        c.witness = ast.str();
        rep.checks.push_back(std::move(c));
    }
    Element target = parse_element(elem_text, ctx);
    try {
        std::string rendered;
        if (mode == "exact") {
            rendered = apply_ast_exact(ast, target, ctx).str();
        } else {
            GradedSeries start = homogeneous_components(target, cfg.cutoff);
            rendered = apply_ast_truncated(ast, start, ctx).str();
        }
        Check c;
        c.name = "image";
        c.status = CheckStatus::pass;
        c.witness = rendered;
        rep.checks.push_back(std::move(c));
    } catch (const engine_error& e) {
        rep.add_fail("image", e.what());
    }
    return rep;
}

}
