#include "pbsym/qho.hpp"

namespace pbsym {

Element oscillator_eigenfunction(const Rational& omega, int n1, int n2) {
    if (n1 < 0 || n2 < 0) throw value_error("negative state index");
    if (omega <= 0) throw value_error("oscillator frequency must be positive");
    RadScalar norm = RadScalar::sqrt_of(omega) * RadScalar::pi_pow(-1) *
                     hermite_norm_factor(n1) * hermite_norm_factor(n2);
    PolyN h = hermite_scaled(n1, 2, 1, omega) * hermite_scaled(n2, 2, 2, omega);
    return Element(h, 0, -omega / 2).scaled(norm);
}

QhoSystem::QhoSystem(const Rational& omega, const Rational& beta) : omega_(omega), beta_(beta) {
    if (omega <= 0) throw value_error("oscillator frequency must be positive");
    if (beta <= 0 || beta > omega)
        throw value_error("weight parameter must satisfy 0 < beta <= omega");
    // The full pairwise commutator table is the structural precondition for
    // everything else the class exposes, so it is checked once up front.
    DiffOp id = DiffOp::identity(2);
    for (int j = 1; j <= 2; ++j)
        for (int k = 1; k <= 2; ++k) {
            DiffOp mixed = commutator(lowering(j), raising(k));
            if (j == k) mixed = mixed - id;
            if (!mixed.is_zero() || !commutator(lowering(j), lowering(k)).is_zero() ||
                !commutator(raising(j), raising(k)).is_zero())
                throw engine_error("mode operators violate the ladder commutation relations");
        }
}

DiffOp QhoSystem::lowering(int j) const {
    RadScalar norm = RadScalar::sqrt_of(2 * omega_).inverse();
    return (DiffOp::coordinate(2, j).scaled(RadScalar(omega_)) + DiffOp::partial(2, j))
        .scaled(norm);
}

DiffOp QhoSystem::raising(int j) const {
    RadScalar norm = RadScalar::sqrt_of(2 * omega_).inverse();
    return (DiffOp::coordinate(2, j).scaled(RadScalar(omega_)) - DiffOp::partial(2, j))
        .scaled(norm);
}

DiffOp QhoSystem::shifted_hamiltonian() const {
    return (number(1) + number(2)).scaled(RadScalar(omega_));
}

Element QhoSystem::ladder_states(const DiffOp& step1, const DiffOp& step2, Element state, int n1,
                                 int n2) const {
    if (n1 < 0 || n2 < 0) throw value_error("negative state index");
    for (int k = 0; k < n1; ++k)
        state = step1.apply(state).scaled(RadScalar::sqrt_of(Rational(k + 1)).inverse());
    for (int k = 0; k < n2; ++k)
        state = step2.apply(state).scaled(RadScalar::sqrt_of(Rational(k + 1)).inverse());
    return state;
}

Element QhoSystem::first_state(int n1, int n2) const {
    RadScalar norm = RadScalar::sqrt_of(omega_) * RadScalar::pi_pow(-1);
    Element ground = Element::one(2).shift_gamma(-omega_ / 2).scaled(norm);
    return ladder_states(raising(1), raising(2), std::move(ground), n1, n2);
}

Element QhoSystem::first_state_closed(int n1, int n2) const {
    return oscillator_eigenfunction(omega_, n1, n2);
}

Element QhoSystem::second_state(int n1, int n2) const {
    RadScalar norm = RadScalar::sqrt_of(omega_) * RadScalar::pi_pow(-1);
    Element ground = Element::one(2).shift_gamma(omega_ / 2 - beta_).scaled(norm);
    return ladder_states(lowering_star(1), lowering_star(2), std::move(ground), n1, n2);
}

Element QhoSystem::second_state_closed(int n1, int n2) const {
    return first_state_closed(n1, n2).shift_gamma(omega_ - beta_);
}

Element QhoSystem::midpoint_basis(int n1, int n2) const {
    if (beta_ * 2 != omega_)
        throw value_error("the linking basis lives at beta = omega / 2");
    return first_state_closed(n1, n2).shift_gamma(omega_ / 4);
}

Element QhoSystem::midpoint_multiplier() const {
    if (beta_ * 2 != omega_)
        throw value_error("the linking multiplier lives at beta = omega / 2");
    return Element::one(2).shift_gamma(-omega_ / 4);
}

Element QhoSystem::metric_to_first() const {
    if (beta_ * 2 != omega_)
        throw value_error("the metric multipliers live at beta = omega / 2");
    return Element::one(2).shift_gamma(-omega_ / 2);
}

Element QhoSystem::metric_to_second() const {
    if (beta_ * 2 != omega_)
        throw value_error("the metric multipliers live at beta = omega / 2");
    return Element::one(2).shift_gamma(omega_ / 2);
}

}
