#pragma once

#include "pbsym/diffop.hpp"
#include "pbsym/gaussint.hpp"
#include "pbsym/qho.hpp"

namespace pbsym {

// Rational D-type Calogero model on N in {2, 3} particles:
//
//   hamiltonian = 1/2 sum_j (-d_j^2 + omega^2 x_j^2)
//               + nu(nu-1) sum_{i<j} [ (x_i - x_j)^{-2} + (x_i + x_j)^{-2} ]
//
// with ground state (x-chamber representative) prefactor^nu exp(-omega X^2/2)
// and energy N omega / 2 + nu N (N-1) omega. Gauging the hamiltonian by the
// ground state produces  omega euler - 1/2 deformed_laplacian,  whose
// eigenfamilies, similarity chain to the plain oscillator, conjugated ladder
// pair, and adjoint defect this class exposes. The chain and eigenfamilies
// are N = 2 only; operators, gauge identity, and commutators cover both N.
class CalogeroModel {
public:
    // nu > 1/2 unless allow_small_nu is set (identities are rational in nu,
    // so exploration outside the unitary range is possible but opt-in).
    CalogeroModel(int nvars, const Rational& omega, const Rational& nu,
                  bool allow_small_nu = false);

    int nvars() const { return nvars_; }
    const Rational& omega() const { return omega_; }
    const Rational& nu() const { return nu_; }

    const DiffOp& euler() const { return euler_; }                 // sum x_i d_i
    const DiffOp& laplacian() const { return laplacian_; }         // sum d_i^2
    const DiffOp& coord_square() const { return coord_square_; }   // X^2 multiplication
    // laplacian + 4 nu sum_{i<j} (x_i d_i - x_j d_j) / (x_i^2 - x_j^2)
    const DiffOp& deformed_laplacian() const { return deformed_laplacian_; }
    const DiffOp& hamiltonian() const { return hamiltonian_; }
    // omega euler - 1/2 deformed_laplacian
    const DiffOp& gauged_hamiltonian() const { return gauged_; }

    Element ground_state() const;
    Rational ground_energy() const;

    // ground_state^{-1} (hamiltonian - ground_energy) (ground_state * f),
    // evaluated exactly; equals gauged_hamiltonian f on the whole class.
    Element gauge_conjugate(const Element& f) const;

    // exp(-deformed_laplacian / 4 omega) and its inverse; exact application
    // terminates on the invariant subring, truncated handles the rest.
    Element lowering_flow_exact(const Element& f) const;
    GradedSeries lowering_flow_truncated(const Element& f, int cutoff) const;
    GradedSeries lowering_flow_truncated(const GradedSeries& f) const;
    GradedSeries raising_flow_truncated(const GradedSeries& f) const;

    // Invariant eigenstate sqrt(omega/pi) * flow(s^a p^b) with
    // s = x1^2 + x2^2, p = x1 x2; eigenvalue omega (2a + 2b). N = 2 only.
    Element invariant_state(int a, int b) const;
    RadScalar invariant_eigenvalue(int a, int b) const;

    // Unnormalized flow(x1^n1 x2^n2) as a graded series. N = 2 only.
    GradedSeries truncated_state(int n1, int n2, int cutoff) const;

    // (gauged_hamiltonian - eigenvalue) applied to a series; exactness
    // bookkeeping is inherited from the input.
    GradedSeries eigen_residual(const GradedSeries& s, const RadScalar& eigenvalue) const;

    // Conjugated ladder pair: lowering_j = flow (d_j / sqrt(2 omega)) flow^{-1}
    // and raising_k = flow (sqrt(2 omega) x_k) flow^{-1}, each applied through
    // its own truncated conjugation. N = 2 only.
    GradedSeries conjugated_lowering(int j, const GradedSeries& f) const;
    GradedSeries conjugated_raising(int k, const GradedSeries& f) const;

    // Full similarity map applied to oscillator-side coordinates:
    //   T = flow . exp(laplacian / 4 omega) . exp(omega X^2 / 2).
    // The first two steps always terminate; the last is exact when the
    // intermediate polynomial is invariant (otherwise use the truncated
    // variant). N = 2 only.
    Element similarity_chain_exact(const TSpaceVector& u) const;
    GradedSeries similarity_chain_truncated(const TSpaceVector& u, int cutoff) const;

    // Oscillator eigenfunction entering the chain (frequency omega). N = 2.
    Element oscillator_state(int n1, int n2) const;

    // T^{-1} gauged_hamiltonian T via the three terminating conjugation
    // steps; equals the (shifted) oscillator hamiltonian
    // -1/2 laplacian + omega^2/2 X^2 - N omega / 2. N = 2 only.
    DiffOp conjugated_hamiltonian() const;

    // dagger(gauged) + gauged + laplacian
    //   + 4 nu (x1^2 + x2^2) (x1^2 - x2^2)^{-2} + 2 omega; zero exactly. N = 2.
    DiffOp adjoint_defect() const;

private:
    int nvars_;
    Rational omega_;
    Rational nu_;
    DiffOp euler_;
    DiffOp laplacian_;
    DiffOp coord_square_;
    DiffOp deformed_laplacian_;
    DiffOp hamiltonian_;
    DiffOp gauged_;
    void require_two_vars(const char* what) const;
    Element phi_side_sum(const TSpaceVector& u) const;
};

// The ten gauge-identity probes: invariant and non-invariant polynomials
// through degree six.
std::vector<Element> gauge_probe_set(int nvars);

}
