#include "doctest.h"

#include <random>

#include "pbsym/diffop.hpp"

using namespace pbsym;

namespace {

PolyN x(int i) { return PolyN::variable(2, i); }
DiffOp d(int i) { return DiffOp::partial(2, i); }
DiffOp X(int i) { return DiffOp::coordinate(2, i); }

DiffOp euler2() { return X(1).compose(d(1)) + X(2).compose(d(2)); }
DiffOp lap2() { return d(1).compose(d(1)) + d(2).compose(d(2)); }
DiffOp coord_sq2() {
    return DiffOp::multiplication(Element(x(1) * x(1) + x(2) * x(2), 0, 0));
}

// deformed radial operator: Laplacian + 4 nu (x1 d1 - x2 d2)/(x1^2 - x2^2)
DiffOp deformed_lap2(const Rational& nu) {
    RadScalar c(Rational(4) * nu);
    DiffOp drift = DiffOp::term(Element(x(1), -1, 0).scaled(c), {1, 0}) +
                   DiffOp::term(Element(x(2), -1, 0).scaled(-c), {0, 1});
    return lap2() + drift;
}

DiffOp lowering(int i, const Rational& omega) {  // (omega x_i + d_i)/sqrt(2 omega)
    RadScalar norm = RadScalar::sqrt_of(Rational(2) * omega).inverse();
    return (X(i).scaled(RadScalar(omega)) + d(i)).scaled(norm);
}

DiffOp raising(int i, const Rational& omega) {  // (omega x_i - d_i)/sqrt(2 omega)
    RadScalar norm = RadScalar::sqrt_of(Rational(2) * omega).inverse();
    return (X(i).scaled(RadScalar(omega)) - d(i)).scaled(norm);
}

Element random_poly_element(std::mt19937& rng) {
    PolyN p(2);
    int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t) {
        Monomial m{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
        long c = static_cast<long>(rng() % 9) - 4;
        if (c == 0) c = 3;
        p += PolyN::monomial(2, m, RadScalar(Rational(c)));
    }
    return Element(p, 0, 0);
}

DiffOp random_op(std::mt19937& rng) {
    DiffOp op(2);
    int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t) {
        DerivIndex alpha{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
        op += DiffOp::term(random_poly_element(rng), alpha);
    }
    return op;
}

}  // namespace

TEST_CASE("normal ordering of the canonical pair") {
    // d1 x1 = x1 d1 + 1
    DiffOp left = d(1).compose(X(1));
    CHECK(left == X(1).compose(d(1)) + DiffOp::identity(2));
    CHECK(commutator(d(1), X(1)) == DiffOp::identity(2));
    CHECK(commutator(d(1), X(2)).is_zero());
    // composing with the identity changes nothing
    DiffOp a = euler2();
    CHECK(a.compose(DiffOp::identity(2)) == a);
    CHECK(DiffOp::identity(2).compose(a) == a);
}

TEST_CASE("application matches expansion") {
    Element p(x(1) * x(2), 0, 0);
    CHECK(euler2().apply(p) == p.scaled(RadScalar(2)));
    Rational nu(3, 2);
    CHECK(deformed_lap2(nu).apply(p).is_zero());
    Element s(x(1) * x(1) + x(2) * x(2), 0, 0);
    // deformed Laplacian on the radial square: 4 + 8 nu
    CHECK(deformed_lap2(nu).apply(s) ==
          Element(PolyN::constant(2, RadScalar(Rational(4) + Rational(8) * nu)), 0, 0));
    // x1^2: 2 + 8 nu x1^2/(x1^2 - x2^2)
    Element sq(x(1) * x(1), 0, 0);
    Element expect = Element(PolyN::constant(2, RadScalar(2)), 0, 0) +
                     Element((Rational(8) * nu) * (x(1) * x(1)), -1, 0);
    CHECK(deformed_lap2(nu).apply(sq) == expect);
}

TEST_CASE("composition agrees with successive application") {
    std::mt19937 rng(4242);
    for (int t = 0; t < 100; ++t) {
        DiffOp a = random_op(rng);
        DiffOp b = random_op(rng);
        Element f = random_poly_element(rng);
        CHECK(a.compose(b).apply(f) == a.apply(b.apply(f)));
    }
}

TEST_CASE("ladder commutators for the oscillator pair") {
    for (Rational omega : {Rational(1), Rational(4), Rational(5, 2)}) {
        for (int i = 1; i <= 2; ++i) {
            for (int j = 1; j <= 2; ++j) {
                DiffOp c = commutator(lowering(i, omega), raising(j, omega));
                if (i == j)
                    CHECK(c == DiffOp::identity(2));
                else
                    CHECK(c.is_zero());
            }
        }
        CHECK(commutator(lowering(1, omega), lowering(2, omega)).is_zero());
        CHECK(commutator(raising(1, omega), raising(2, omega)).is_zero());
    }
}

TEST_CASE("scaling-algebra commutators") {
    Rational nu(3, 2);
    DiffOp OE = euler2(), OL = deformed_lap2(nu), X2 = coord_sq2(), LAP = lap2();
    CHECK(commutator(OL, OE) == OL.scaled(RadScalar(2)));
    CHECK(commutator(OE, X2) == X2.scaled(RadScalar(2)));
    CHECK(commutator(LAP, OE) == LAP.scaled(RadScalar(2)));
    CHECK(commutator(LAP, X2) == (euler2() + DiffOp::identity(2)).scaled(RadScalar(4)));
}

TEST_CASE("Jacobi identity on the scaling algebra") {
    Rational nu(5, 2);
    std::vector<DiffOp> ops{euler2(), deformed_lap2(nu), coord_sq2(), lap2()};
    for (const DiffOp& A : ops)
        for (const DiffOp& B : ops)
            for (const DiffOp& C : ops) {
                DiffOp j = commutator(A, commutator(B, C)) + commutator(B, commutator(C, A)) +
                           commutator(C, commutator(A, B));
                CHECK(j.is_zero());
            }
}

TEST_CASE("formal adjoint") {
    CHECK(d(1).dagger() == -d(1));
    // (x1 d1)^dagger = -d1 x1 = -x1 d1 - 1
    DiffOp xd = X(1).compose(d(1));
    CHECK(xd.dagger() == -xd - DiffOp::identity(2));
    // involution and anti-homomorphism on a small operator set
    std::mt19937 rng(17);
    for (int t = 0; t < 50; ++t) {
        DiffOp a = random_op(rng);
        DiffOp b = random_op(rng);
        CHECK(a.dagger().dagger() == a);
        CHECK(a.compose(b).dagger() == b.dagger().compose(a.dagger()));
    }
    // Gaussian coefficients are rejected
    DiffOp g = DiffOp::multiplication(Element::one(2).shift_gamma(Rational(-1, 2)));
    CHECK_THROWS_AS(g.dagger(), value_error);
}

TEST_CASE("weighted adjoint") {
    Rational omega(1);
    // with weight exponent -omega/2 X^2 the raising operator's star is d_j/sqrt(2 omega)
    Rational gamma_pi = -omega / 2;
    DiffOp bstar = raising(1, omega).star(gamma_pi);
    CHECK(bstar == d(1).scaled(RadScalar::sqrt_of(2 * omega).inverse()));
    // with the general weight (beta - omega) X^2: a_j^* = (omega x_j - pi_j - d_j)/sqrt(2 omega)
    Rational beta(1, 4);
    Rational gp = beta - omega;
    DiffOp astar = lowering(1, omega).star(gp);
    DiffOp expect = (X(1).scaled(RadScalar(omega - 2 * gp)) - d(1))
                        .scaled(RadScalar::sqrt_of(2 * omega).inverse());
    CHECK(astar == expect);
    // star at weight 0 reduces to the plain adjoint; star is an involution
    std::mt19937 rng(23);
    for (int t = 0; t < 30; ++t) {
        DiffOp a = random_op(rng);
        CHECK(a.star(0) == a.dagger());
        CHECK(a.star(gp).star(gp) == a);
    }
}

TEST_CASE("exact operator exponential terminates on nilpotent actions") {
    Rational omega(1);
    // exp(Laplacian/4) applied to the degree-2 oscillator polynomial 4x1^2 - 2
    Element h2(Rational(4) * (x(1) * x(1)) - PolyN::constant(2, RadScalar(2)), 0, 0);
    Element out = apply_exp_exact(RadScalar(Rational(1, 4)), lap2(), h2);
    CHECK(out == Element(Rational(4) * (x(1) * x(1)), 0, 0));
    // exp(-OL/4) on the invariant s: s - (1 + 2 nu)
    Rational nu(3, 2);
    Element s(x(1) * x(1) + x(2) * x(2), 0, 0);
    Element ws = apply_exp_exact(RadScalar(Rational(-1, 4)), deformed_lap2(nu), s);
    CHECK(ws == s - Element(PolyN::constant(2, RadScalar(Rational(1) + 2 * nu)), 0, 0));
    // exp(-OL/4) on the non-invariant x1^2 never terminates
    Element sq(x(1) * x(1), 0, 0);
    try {
        apply_exp_exact(RadScalar(Rational(-1, 4)), deformed_lap2(nu), sq, 12);
        FAIL("expected nontermination_error");
    } catch (const nontermination_error& e) {
        CHECK_FALSE(e.witness.empty());
    }
}

TEST_CASE("multiplication exponentials shift the Gaussian exponent") {
    Element f(x(1), 0, Rational(-1, 2));
    Element out = apply_exp_exact(RadScalar(Rational(1, 2)), coord_sq2(), f);
    CHECK(out == Element(x(1), 0, 0));
    // irrational shift rates are rejected
    CHECK_THROWS_AS(apply_exp_exact(RadScalar::sqrt_of(2), coord_sq2(), f), value_error);
}

TEST_CASE("truncated exponential confines the dropped tail") {
    Rational nu(3, 2);
    DiffOp OL = deformed_lap2(nu);
    Element sq(x(1) * x(1), 0, 0);
    GradedSeries series = apply_exp_truncated(RadScalar(Rational(-1, 4)), OL, sq, -6);
    CHECK(series.dropped());
    CHECK(series.component(2) == sq);
    // degree 0: -(1/4)(2 + 8 nu x1^2/P) with nu = 3/2, P = x1^2 - x2^2
    Element deg0((Rational(-7, 2) * (x(1) * x(1))) + (Rational(1, 2) * (x(2) * x(2))), -1, 0);
    CHECK(series.component(0) == deg0);
    // degree -2: (3/4)(x1^4 - 6 x1^2 x2^2 + x2^4) P^-3
    PolyN q = x(1) * x(1) * x(1) * x(1) - Rational(6) * (x(1) * x(1) * x(2) * x(2)) +
              x(2) * x(2) * x(2) * x(2);
    CHECK(series.component(-2) == Element(q, -3, 0).scaled(RadScalar(Rational(3, 4))));
    // the invariant input reproduces the exact result with no drops
    Element s(x(1) * x(1) + x(2) * x(2), 0, 0);
    GradedSeries inv = apply_exp_truncated(RadScalar(Rational(-1, 4)), OL, s, -6);
    CHECK_FALSE(inv.dropped());
    CHECK(inv.to_element() == apply_exp_exact(RadScalar(Rational(-1, 4)), OL, s));
    // generators that do not lower degree are rejected in truncated mode
    CHECK_THROWS_AS(apply_exp_truncated(RadScalar(1), euler2(), sq, -6), value_error);
}

TEST_CASE("nested-commutator exponential conjugation") {
    Rational nu(3, 2), omega(2);
    DiffOp OE = euler2(), OL = deformed_lap2(nu);
    // exp(-OL/4w) (w OE) exp(OL/4w) = w OE - OL/2, terminating after one step
    DiffOp conj = ad_exponential(RadScalar(Rational(-1, 4) / omega), OL,
                                 OE.scaled(RadScalar(omega)));
    CHECK(conj == OE.scaled(RadScalar(omega)) - OL.scaled(RadScalar(Rational(1, 2))));
    // the series stops because [OL, [OL, OE]] = 0
    CHECK(commutator(OL, commutator(OL, OE)).is_zero());
}

TEST_CASE("span comparison reports witnesses") {
    std::vector<Element> span = monomial_span(2, 2);
    CHECK(span.size() == 6);
    SpanComparison same = equal_on_span(euler2(), euler2(), span);
    CHECK(same.equal);
    SpanComparison diff = equal_on_span(DiffOp::identity(2), DiffOp(2),
                                        {Element::one(2)});
    CHECK_FALSE(diff.equal);
    CHECK(diff.witness.find("(1)") != std::string::npos);
    CHECK(monomial_span(3, 8).size() == 165);
}

TEST_CASE("operator rendering") {
    DiffOp op = X(1).compose(d(1));
    CHECK(op.str() == "(x1)*d1");
    CHECK(DiffOp(2).str() == "0");
}
