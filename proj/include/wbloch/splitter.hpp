#pragma once

#include <Eigen/Dense>

#include "wbloch/states.hpp"

namespace wbloch {

/// Mirror-folded beam-splitter cascade: K identical splitters of
/// transmissivity T per arm, 2K output ports total. All splitter and
/// propagation phases are taken to be unity.
struct CascadeSpec {
    double transmissivity = 0.5;
    int stages_per_arm = 13;

    int total_ports() const { return 2 * stages_per_arm; }
};

struct CascadeResult {
    AmplitudeProfile profile;  // unit-norm W-state coefficients
    double residual_fraction;  // photon fraction R^K never extracted
};

/// Throws std::invalid_argument unless 0 < T <= 1 and K >= 1.
void validate(const CascadeSpec& spec);

/// Unnormalized port intensities, outermost-left to outermost-right:
///   T R^{K-1}/2, ..., T R/2, T/2, T/2, T R/2, ..., T R^{K-1}/2
/// with R = 1 - T. They sum to 1 - R^K; the remainder is the photon
/// fraction still circulating after K stages.
Eigen::VectorXd cascade_intensities(const CascadeSpec& spec);

/// W-state coefficients c_p = sqrt(I_p / sum I), i.e. the cascade
/// output post-selected on the photon leaving one of the 2K ports.
/// The discarded fraction R^K is reported alongside.
CascadeResult cascade_amplitudes(const CascadeSpec& spec);

}  // namespace wbloch
