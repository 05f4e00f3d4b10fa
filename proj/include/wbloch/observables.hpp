#pragma once

#include <string>

#include <Eigen/Dense>

#include "wbloch/lattice.hpp"
#include "wbloch/propagator.hpp"
#include "wbloch/states.hpp"

namespace wbloch {

/// Mean output intensities on a (time, site) grid; row i holds the
/// site intensities at tau_grid[i].
struct IntensityMap {
    Eigen::MatrixXd values;
    Eigen::VectorXd tau_grid;
    LatticeParams params;
    std::string input_descriptor;
};

/// General bilinear law: I_q = sum_{r,s} conj(G_{q,r}) G_{q,s} m_{r,s}.
/// Any residual imaginary part above 1e-9 signals a non-Hermitian m
/// and throws NumericsError.
Eigen::VectorXd intensity_from_correlations(const PropagatorMatrix& propagator,
                                            const CorrelationMatrix& correlations);

/// Rank-1 specialization for a single photon shared across the inputs:
/// I_q = |sum_p G_{q,p} c_p|^2.
Eigen::VectorXd intensity_wstate(const PropagatorMatrix& propagator,
                                 const AmplitudeProfile& profile);

/// Classical-field specialization: I_q = |sum_p G_{q,p} alpha_p|^2.
/// Identical arithmetic to intensity_wstate; the two agree exactly for
/// equal amplitude vectors.
Eigen::VectorXd intensity_coherent(const PropagatorMatrix& propagator,
                                   const AmplitudeProfile& amplitudes);

/// Incoherent inputs carry no cross terms: I_q = sum_p |G_{q,p}|^2 n_p.
Eigen::VectorXd intensity_incoherent(const PropagatorMatrix& propagator,
                                     const OccupationList& occupations);

}  // namespace wbloch
