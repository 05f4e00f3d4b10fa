#pragma once

#include <Eigen/Dense>

#include "wbloch/lattice.hpp"

namespace wbloch {

enum class PropagatorMethod { Analytic, Numeric };

/// Green's function of the array at dimensionless time tau: entry
/// (p, q) maps the input-mode operator at site q to the output mode at
/// site p, so output amplitudes are g * input.
struct PropagatorMatrix {
    Eigen::MatrixXcd g;
    double tau = 0.0;
    PropagatorMethod method = PropagatorMethod::Numeric;
    LatticeParams params;
};

/// Eigendecomposition of the (real symmetric tridiagonal) lattice
/// Hamiltonian, reusable across many evolution times.
struct TridiagonalSpectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;  // columns
    LatticeParams params;
};

/// Throws NumericsError if the eigensolver does not converge.
TridiagonalSpectrum diagonalize(const LatticeParams& params);

/// Closed-form propagator on the finite site window:
///   G_{p,q} = exp[i a q tau + i (p-q)(a tau - pi)/2] * J_{q-p}((4/a) sin(a tau / 2))
/// with the a -> 0 limit taken as argument 2*tau. The formula assumes
/// an unbounded array; columns near the window edge are truncated
/// approximations (see unitarity_defect).
PropagatorMatrix analytic_propagator(const LatticeParams& params, double tau);

/// exp(-i H tau) by spectral synthesis V exp(-i L tau) V^T. Unitary to
/// 1e-10 by construction; a larger defect throws NumericsError.
PropagatorMatrix numeric_propagator(const LatticeParams& params, double tau);
PropagatorMatrix numeric_propagator(const TridiagonalSpectrum& spectrum, double tau);

/// max |(G^dagger G - I)_{ij}|.
double unitarity_defect(const PropagatorMatrix& propagator);

}  // namespace wbloch
