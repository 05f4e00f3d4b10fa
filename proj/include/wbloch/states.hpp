#pragma once

#include <Eigen/Dense>

namespace wbloch {

enum class ProfileKind { WState, Coherent };

/// Complex amplitude vector over the input sites. As a WState it holds
/// the single-photon superposition coefficients c_p (unit norm); as
/// Coherent it holds classical field amplitudes. A WState carries no
/// mean field: every observable in this library consumes it only
/// through its second moments.
struct AmplitudeProfile {
    Eigen::VectorXcd amplitudes;
    ProfileKind kind = ProfileKind::WState;
};

/// Second-moment matrix <a_p^dag a_q> of the input field; Hermitian,
/// positive semidefinite, and the sufficient statistic for all mean
/// output intensities.
using CorrelationMatrix = Eigen::MatrixXcd;

/// Mean photon numbers <a_p^dag a_p> of an incoherent input.
using OccupationList = Eigen::VectorXd;

/// Real nonnegative profile ~ exp[-(p - center)^2 / (2 sigma^2)] on
/// sites p = 1..n_sites, normalized so the squared amplitudes sum to 1
/// (for both kinds, so W-state and coherent maps share a color scale).
AmplitudeProfile gaussian_profile(int n_sites, double center, double sigma, ProfileKind kind);

/// Rank-1 matrix with entries conj(c_p) * c_q; trace 1. Rejects
/// profiles that are not WState kind or whose norm is off by > 1e-9.
CorrelationMatrix w_correlations(const AmplitudeProfile& profile);

/// Diagonal correlation matrix of an incoherent input: all cross
/// correlations vanish.
CorrelationMatrix incoherent_correlations(const OccupationList& occupations);

/// Multiplies amplitudes elementwise by exp(i phase_p), e.g. a thin
/// phase object across the input ports. Norm-preserving.
AmplitudeProfile apply_phase_mask(const AmplitudeProfile& profile,
                                  const Eigen::VectorXd& phases);

}  // namespace wbloch
