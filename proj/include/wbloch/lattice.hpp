#pragma once

#include <Eigen/Dense>

namespace wbloch {

/// Waveguide-array model: `num_sites` guides with nearest-neighbour
/// coupling (set to 1 by the choice of units) and a linear detuning
/// ramp of dimensionless slope `alpha` across the array. Site labels
/// run from `site_origin` upward; only intensity differences are
/// observable, so the origin is a labelling convention.
struct LatticeParams {
    int num_sites = 26;
    double alpha = 0.5;
    int site_origin = 1;
};

/// Throws std::invalid_argument unless num_sites >= 2 and alpha is
/// finite and >= 0.
void validate(const LatticeParams& params);

/// Tight-binding Hamiltonian in units of the coupling:
/// diagonal alpha*p for p = site_origin, ..., and unit first
/// off-diagonals. Real, symmetric, tridiagonal.
Eigen::MatrixXd build_hamiltonian(const LatticeParams& params);

}  // namespace wbloch
