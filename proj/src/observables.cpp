#include "wbloch/observables.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wbloch/errors.hpp"

namespace wbloch {

namespace {

Eigen::VectorXd squared_output_amplitudes(const PropagatorMatrix& propagator,
                                          const Eigen::VectorXcd& input) {
    if (input.size() != propagator.g.cols()) {
        throw std::invalid_argument("intensity: amplitude length does not match propagator");
    }
    const Eigen::VectorXcd out = propagator.g * input;
    return out.cwiseAbs2();
}

}  // namespace

Eigen::VectorXd intensity_from_correlations(const PropagatorMatrix& propagator,
                                            const CorrelationMatrix& correlations) {
    const auto& g = propagator.g;
    if (correlations.rows() != g.cols() || correlations.cols() != g.cols()) {
        throw std::invalid_argument("intensity_from_correlations: dimension mismatch");
    }
    // I_q = [conj(G) m G^T]_{qq}
    const Eigen::MatrixXcd partial = g.conjugate() * correlations;
    const Eigen::VectorXcd raw = (partial.cwiseProduct(g)).rowwise().sum();

    const double residue = raw.imag().cwiseAbs().maxCoeff();
    if (residue > 1e-9) {
        throw NumericsError("intensity_from_correlations: imaginary residue " +
                            std::to_string(residue) + ": correlation matrix is not Hermitian");
    }
    return raw.real();
}

Eigen::VectorXd intensity_wstate(const PropagatorMatrix& propagator,
                                 const AmplitudeProfile& profile) {
    if (profile.kind != ProfileKind::WState) {
        throw std::invalid_argument("intensity_wstate: profile is not a W-state");
    }
    const double norm2 = profile.amplitudes.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-9) {
        throw std::invalid_argument("intensity_wstate: W-state norm^2 is " +
                                    std::to_string(norm2) + ", expected 1");
    }
    return squared_output_amplitudes(propagator, profile.amplitudes);
}

Eigen::VectorXd intensity_coherent(const PropagatorMatrix& propagator,
                                   const AmplitudeProfile& amplitudes) {
    return squared_output_amplitudes(propagator, amplitudes.amplitudes);
}

Eigen::VectorXd intensity_incoherent(const PropagatorMatrix& propagator,
                                     const OccupationList& occupations) {
    if (occupations.size() != propagator.g.cols()) {
        throw std::invalid_argument("intensity_incoherent: occupation length mismatch");
    }
    for (Eigen::Index i = 0; i < occupations.size(); ++i) {
        if (!std::isfinite(occupations[i]) || occupations[i] < 0.0) {
            throw std::invalid_argument("intensity_incoherent: occupations must be finite and >= 0");
        }
    }
    return propagator.g.cwiseAbs2() * occupations;
}

}  // namespace wbloch
