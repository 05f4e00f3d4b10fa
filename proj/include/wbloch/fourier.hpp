#pragma once

#include <complex>

#include <Eigen/Dense>

#include "wbloch/lattice.hpp"
#include "wbloch/states.hpp"

namespace wbloch {

/// Quasi-momentum spectrum of an amplitude profile, sampled on a
/// uniform grid over [-pi, pi].
struct SpectralProfile {
    Eigen::VectorXd k_grid;
    Eigen::VectorXcd values;
};

/// c~(k) = (1/sqrt(2 pi)) sum_q c_q e^{-i k q}, sites labelled 1..N.
/// k must lie in [-pi, pi]; the sum itself is 2 pi periodic.
std::complex<double> c_tilde(const AmplitudeProfile& profile, double k);

/// Samples c_tilde on n_points uniformly spaced k values spanning
/// [-pi, pi] inclusive.
SpectralProfile spectral_profile(const AmplitudeProfile& profile, int n_points);

/// Momentum-integral route to the output intensities,
///   I_p = (1/2 pi) | Int_{-pi}^{pi} c~(k - a tau) e^{i k p}
///                    exp[(2i/a)(sin k - sin(k - a tau))] dk |^2,
/// evaluated by the periodic trapezoid rule (spectrally accurate
/// here). Equals the site-space result up to quadrature error.
/// Requires alpha > 0 and quadrature_nodes >= 256.
Eigen::VectorXd intensity_via_integral(const AmplitudeProfile& profile,
                                       const LatticeParams& params, double tau,
                                       int quadrature_nodes = 2048);

/// Narrow-spectrum envelope approximation: the initial intensity
/// profile rigidly displaced by (4/a) sin^2(a tau / 2) sites,
/// evaluated at non-integer offsets by linear interpolation (zero
/// outside the window). Requires alpha > 0.
Eigen::VectorXd approx_intensity(const AmplitudeProfile& profile, const LatticeParams& params,
                                 double tau);

/// Full width at half maximum of |c~(k)|^2, located by linear
/// interpolation on a dense k grid. Throws SpectrumError when the
/// sampled spectrum is flat or not unimodal.
double spectral_width(const AmplitudeProfile& profile, int grid_points = 4096);

/// First strictly positive revival time 2 pi / alpha.
double bloch_period(double alpha);

}  // namespace wbloch
