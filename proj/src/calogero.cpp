#include "pbsym/calogero.hpp"

namespace pbsym {

namespace {

// prod over pairs (k,l) != (i,j) of (x_k^2 - x_l^2)
PolyN pair_cofactor(int nvars, int i, int j) {
    PolyN out = PolyN::constant(nvars, RadScalar(1));
    for (int k = 1; k <= nvars; ++k)
        for (int l = k + 1; l <= nvars; ++l) {
            if (k == i && l == j) continue;
            PolyN xk = PolyN::variable(nvars, k);
            PolyN xl = PolyN::variable(nvars, l);
            out = out * (xk * xk - xl * xl);
        }
    return out;
}

}  // namespace

CalogeroModel::CalogeroModel(int nvars, const Rational& omega, const Rational& nu,
                             bool allow_small_nu)
    : nvars_(nvars),
      omega_(omega),
      nu_(nu),
      euler_(nvars),
      laplacian_(nvars),
      coord_square_(nvars),
      deformed_laplacian_(nvars),
      hamiltonian_(nvars),
      gauged_(nvars) {
    if (nvars != 2 && nvars != 3) throw value_error("the model is built for 2 or 3 variables");
    if (omega <= 0) throw value_error("frequency must be positive");
    if (!allow_small_nu && 2 * nu <= 1)
        throw value_error("coupling must satisfy nu > 1/2 (pass the override to explore)");

    PolyN x2sum(nvars);
    for (int i = 1; i <= nvars; ++i) {
        PolyN xi = PolyN::variable(nvars, i);
        x2sum += xi * xi;
        DerivIndex di(nvars, 0);
        di[i - 1] = 1;
        euler_ += DiffOp::term(Element::from_poly(xi), di);
        DerivIndex dii(nvars, 0);
        dii[i - 1] = 2;
        laplacian_ += DiffOp::term(Element::one(nvars), dii);
    }
    coord_square_ = DiffOp::multiplication(Element::from_poly(x2sum));

    deformed_laplacian_ = laplacian_;
    for (int i = 1; i <= nvars; ++i)
        for (int j = i + 1; j <= nvars; ++j) {
            PolyN cof = pair_cofactor(nvars, i, j);
            RadScalar c(4 * nu_);
            DerivIndex di(nvars, 0), dj(nvars, 0);
            di[i - 1] = 1;
            dj[j - 1] = 1;
            deformed_laplacian_ +=
                DiffOp::term(Element(PolyN::variable(nvars, i) * cof, -1, 0).scaled(c), di);
            deformed_laplacian_ +=
                DiffOp::term(Element(PolyN::variable(nvars, j) * cof, -1, 0).scaled(-c), dj);
        }

    hamiltonian_ = (coord_square_.scaled(RadScalar(omega_ * omega_)) - laplacian_)
                       .scaled(RadScalar(Rational(1, 2)));
    Rational coupling = nu_ * (nu_ - 1);
    if (coupling != 0) {
        for (int i = 1; i <= nvars; ++i)
            for (int j = i + 1; j <= nvars; ++j) {
                // 1/(x_i - x_j)^2 + 1/(x_i + x_j)^2 = 2 (x_i^2 + x_j^2) / (x_i^2 - x_j^2)^2
                PolyN xi = PolyN::variable(nvars, i);
                PolyN xj = PolyN::variable(nvars, j);
                PolyN cof = pair_cofactor(nvars, i, j);
                PolyN num = (xi * xi + xj * xj).scaled(RadScalar(2 * coupling)) * cof * cof;
                hamiltonian_ += DiffOp::multiplication(Element(num, -2, 0));
            }
    }
    gauged_ = euler_.scaled(RadScalar(omega_)) -
              deformed_laplacian_.scaled(RadScalar(Rational(1, 2)));
}

Element CalogeroModel::ground_state() const {
    return Element(PolyN::constant(nvars_, RadScalar(1)), nu_, -omega_ / 2);
}

Rational CalogeroModel::ground_energy() const {
    return Rational(nvars_) * omega_ / 2 + nu_ * nvars_ * (nvars_ - 1) * omega_;
}

Element CalogeroModel::gauge_conjugate(const Element& f) const {
    Element dressed = ground_state() * f;
    Element acted = hamiltonian_.apply(dressed) - dressed.scaled(RadScalar(ground_energy()));
    // exact division by the ground state: multiply by its reciprocal
    Element inverse_ground(PolyN::constant(nvars_, RadScalar(1)), -nu_, omega_ / 2);
    return acted * inverse_ground;
}

void CalogeroModel::require_two_vars(const char* what) const {
    if (nvars_ != 2) throw value_error(std::string(what) + " is available for 2 variables only");
}

Element CalogeroModel::lowering_flow_exact(const Element& f) const {
    require_two_vars("the lowering flow");
    // The generator is homogeneous of scaling degree -2, so a Gaussian-free
    // input of polynomial degree d either terminates within d/2 + 1 terms or
    // leaves the polynomial ring for good; cap the series accordingly instead
    // of grinding out the generic iteration limit.
    int bound = 64;
    if (f.gamma() == 0) {
        int d = f.poly().total_degree();
        bound = d < 0 ? 1 : d / 2 + 2;
    }
    return apply_exp_exact(RadScalar(Rational(-1, 4) / omega_), deformed_laplacian_, f, bound);
}

GradedSeries CalogeroModel::lowering_flow_truncated(const Element& f, int cutoff) const {
    require_two_vars("the lowering flow");
    return apply_exp_truncated(RadScalar(Rational(-1, 4) / omega_), deformed_laplacian_, f,
                               cutoff);
}

GradedSeries CalogeroModel::lowering_flow_truncated(const GradedSeries& f) const {
    require_two_vars("the lowering flow");
    return apply_exp_truncated(RadScalar(Rational(-1, 4) / omega_), deformed_laplacian_, f);
}

GradedSeries CalogeroModel::raising_flow_truncated(const GradedSeries& f) const {
    require_two_vars("the raising flow");
    return apply_exp_truncated(RadScalar(Rational(1, 4) / omega_), deformed_laplacian_, f);
}

Element CalogeroModel::invariant_state(int a, int b) const {
    require_two_vars("the invariant family");
    if (a < 0 || b < 0) throw value_error("negative invariant exponent");
    PolyN x1 = PolyN::variable(2, 1);
    PolyN x2 = PolyN::variable(2, 2);
    PolyN s = x1 * x1 + x2 * x2;
    PolyN p = x1 * x2;
    PolyN mono = PolyN::constant(2, RadScalar(1));
    for (int k = 0; k < a; ++k) mono = mono * s;
    for (int k = 0; k < b; ++k) mono = mono * p;
    Element state = lowering_flow_exact(Element::from_poly(mono));
    return state.scaled(RadScalar::sqrt_of(omega_) * RadScalar::pi_pow(-1));
}

RadScalar CalogeroModel::invariant_eigenvalue(int a, int b) const {
    return RadScalar(omega_ * (2 * a + 2 * b));
}

GradedSeries CalogeroModel::truncated_state(int n1, int n2, int cutoff) const {
    require_two_vars("the truncated family");
    if (n1 < 0 || n2 < 0) throw value_error("negative state index");
    PolyN mono = PolyN::monomial(2, {n1, n2}, RadScalar(1));
    return lowering_flow_truncated(Element::from_poly(mono), cutoff);
}

GradedSeries CalogeroModel::eigen_residual(const GradedSeries& s,
                                           const RadScalar& eigenvalue) const {
    return gauged_.apply(s) - s.scaled(eigenvalue);
}

GradedSeries CalogeroModel::conjugated_lowering(int j, const GradedSeries& f) const {
    require_two_vars("the conjugated ladder");
    GradedSeries inner = raising_flow_truncated(f);
    DiffOp d = DiffOp::partial(2, j).scaled(RadScalar::sqrt_of(2 * omega_).inverse());
    return lowering_flow_truncated(d.apply(inner));
}

GradedSeries CalogeroModel::conjugated_raising(int k, const GradedSeries& f) const {
    require_two_vars("the conjugated ladder");
    GradedSeries inner = raising_flow_truncated(f);
    DiffOp m = DiffOp::coordinate(2, k).scaled(RadScalar::sqrt_of(2 * omega_));
    return lowering_flow_truncated(m.apply(inner));
}

Element CalogeroModel::oscillator_state(int n1, int n2) const {
    require_two_vars("the oscillator side");
    return oscillator_eigenfunction(omega_, n1, n2);
}

Element CalogeroModel::phi_side_sum(const TSpaceVector& u) const {
    Element out = Element::zero(2);
    for (const auto& [index, coeff] : u.coords) {
        if (index.size() != 2) throw value_error("coordinate index must have two entries");
        out = out + oscillator_state(index[0], index[1]).scaled(coeff);
    }
    return out;
}

Element CalogeroModel::similarity_chain_exact(const TSpaceVector& u) const {
    require_two_vars("the similarity chain");
    Element state = phi_side_sum(u);
    if (state.is_zero()) return state;
    state = apply_exp_exact(RadScalar(omega_ / 2), coord_square_, state);
    state = apply_exp_exact(RadScalar(Rational(1, 4) / omega_), laplacian_, state);
    return lowering_flow_exact(state);
}

GradedSeries CalogeroModel::similarity_chain_truncated(const TSpaceVector& u, int cutoff) const {
    require_two_vars("the similarity chain");
    Element state = phi_side_sum(u);
    if (!state.is_zero()) {
        state = apply_exp_exact(RadScalar(omega_ / 2), coord_square_, state);
        state = apply_exp_exact(RadScalar(Rational(1, 4) / omega_), laplacian_, state);
    }
    return lowering_flow_truncated(state, cutoff);
}

DiffOp CalogeroModel::conjugated_hamiltonian() const {
    require_two_vars("the conjugated hamiltonian");
    RadScalar quarter = RadScalar(Rational(1, 4) / omega_);
    // undo the flow: conjugation by exp(+deformed_laplacian / 4 omega)
    DiffOp step = ad_exponential(quarter, deformed_laplacian_, gauged_);
    // then by exp(-laplacian / 4 omega)
    step = ad_exponential(-quarter, laplacian_, step);
    // then by the Gaussian multiplier exp(-omega X^2 / 2)
    return ad_exponential(RadScalar(-omega_ / 2), coord_square_, step);
}

DiffOp CalogeroModel::adjoint_defect() const {
    require_two_vars("the adjoint identity");
    PolyN x1 = PolyN::variable(2, 1);
    PolyN x2 = PolyN::variable(2, 2);
    Element interaction((x1 * x1 + x2 * x2).scaled(RadScalar(4 * nu_)), -2, 0);
    return gauged_.dagger() + gauged_ + laplacian_ + DiffOp::multiplication(interaction) +
           DiffOp::identity(2).scaled(RadScalar(2 * omega_));
}

std::vector<Element> gauge_probe_set(int nvars) {
    auto x = [nvars](int i) { return PolyN::variable(nvars, i); };
    PolyN s(nvars);
    for (int i = 1; i <= nvars; ++i) s += x(i) * x(i);
    PolyN p = x(1) * x(2);
    if (nvars == 3) p = p * x(3);
    std::vector<PolyN> polys{
        PolyN::constant(nvars, RadScalar(1)),  // degree 0, invariant
        x(1),                                  // degree 1
        x(1) * x(1),                           // degree 2, breaks the pair symmetry
        p,                                     // invariant product
        s,                                     // invariant sum
        x(1) * x(1) * x(2) * x(2),             // degree 4
        s * s,                                 // invariant, degree 4
        x(1) * x(1) * x(1) * x(2),             // degree 4, non-invariant
        s * p,                                 // invariant, mixed
        x(1) * x(1) * x(2) * x(2) * x(2) * x(2)  // degree 6
    };
    std::vector<Element> out;
    out.reserve(polys.size());
    for (auto& q : polys) out.push_back(Element::from_poly(std::move(q)));
    return out;
}

}
