#include "doctest.h"

#include <random>

#include "pbsym/poly.hpp"

using namespace pbsym;

namespace {

PolyN random_poly(std::mt19937& rng, int nvars, int maxdeg) {
    PolyN p(nvars);
    int nterms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < nterms; ++t) {
        Monomial m(nvars, 0);
        for (int i = 0; i < nvars; ++i) m[i] = static_cast<int>(rng() % (maxdeg + 1));
        long c = static_cast<long>(rng() % 11) - 5;
        if (c == 0) c = 1;
        p += PolyN::monomial(nvars, m, RadScalar(Rational(c)));
    }
    return p;
}

PolyN x(int i) { return PolyN::variable(2, i); }

}  // namespace

TEST_CASE("construction and degree bookkeeping") {
    PolyN p = x(1) * x(1) + x(1) * x(2) + PolyN::constant(2, RadScalar(1));
    CHECK(p.total_degree() == 2);
    CHECK(PolyN(2).total_degree() == -1);
    CHECK(PolyN(2).is_zero());
    CHECK(p.coeff({1, 1}) == RadScalar(1));
    CHECK(p.coeff({0, 2}).is_zero());
    CHECK_THROWS_AS(PolyN::variable(2, 3), value_error);
    CHECK_THROWS_AS(PolyN::monomial(2, {-1, 0}, RadScalar(1)), value_error);
}

TEST_CASE("differentiation") {
    PolyN p = x(1) * x(1);
    CHECK(p.derivative(1) == Rational(2) * x(1));
    CHECK(p.derivative(2).is_zero());
    PolyN q = x(1) * x(1) * x(2);
    CHECK(q.derivative(2) == x(1) * x(1));
}

TEST_CASE("arithmetic closes and cancels") {
    PolyN p = x(1) + x(2);
    PolyN q = x(1) - x(2);
    CHECK(p * q == x(1) * x(1) - x(2) * x(2));
    CHECK((p - p).is_zero());
    CHECK(p.scaled(RadScalar()) == PolyN(2));
}

TEST_CASE("exact division by the pair prefactor") {
    PolyN pref = x(1) * x(1) - x(2) * x(2);
    PolyN f = pref * pref * (x(1) + Rational(3) * x(2));
    PolyN q(2);
    REQUIRE(f.divide_exact(pref, q));
    CHECK(q == pref * (x(1) + Rational(3) * x(2)));
    PolyN notdiv = x(1) * x(1) + x(2) * x(2);
    CHECK_FALSE(notdiv.divide_exact(pref, q));
    // coefficients stay exact through division even with radical scalars
    PolyN g = pref.scaled(RadScalar::sqrt_of(2));
    REQUIRE(g.divide_exact(pref, q));
    CHECK(q == PolyN::constant(2, RadScalar::sqrt_of(2)));
}

TEST_CASE("division round-trips on random polynomials") {
    std::mt19937 rng(99);
    PolyN pref = x(1) * x(1) - x(2) * x(2);
    for (int t = 0; t < 100; ++t) {
        PolyN f = random_poly(rng, 2, 3);
        PolyN prod = f * pref;
        PolyN q(2);
        REQUIRE(prod.divide_exact(pref, q));
        CHECK(q == f);
    }
}

TEST_CASE("homogeneous split") {
    PolyN p = x(1) * x(1) + x(1) * x(2) + PolyN::constant(2, RadScalar(1));
    auto parts = p.homogeneous_split();
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(0) == PolyN::constant(2, RadScalar(1)));
    CHECK(parts.at(2) == x(1) * x(1) + x(1) * x(2));
    CHECK(parts.at(2).is_homogeneous());
    CHECK_FALSE(p.is_homogeneous());
    CHECK(PolyN(2).is_homogeneous());
}

TEST_CASE("evaluation matches exact arithmetic") {
    PolyN p = x(1) * x(1) - x(2) * x(2);
    CHECK(p.eval({2.0, 1.0}) == doctest::Approx(3.0));
    PolyN q = p.scaled(RadScalar::sqrt_of(2));
    CHECK(q.eval({1.0, 0.0}) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("rendering uses graded-lexicographic order") {
    PolyN p = PolyN::constant(2, RadScalar(1)) + x(1) * x(1) - Rational(2) * x(2);
    CHECK(p.str() == "x1^2 - 2*x2 + 1");
    CHECK(PolyN(2).str() == "0");
    PolyN mixed = PolyN::constant(2, RadScalar(1) + RadScalar::sqrt_of(2));
    CHECK(mixed.str() == "(1 + sqrt(2))");
}
