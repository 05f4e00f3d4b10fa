#include "wbloch/states.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace wbloch {

AmplitudeProfile gaussian_profile(int n_sites, double center, double sigma, ProfileKind kind) {
    if (n_sites < 1) throw std::invalid_argument("gaussian_profile: n_sites must be >= 1");
    if (!std::isfinite(sigma) || sigma <= 0.0) {
        throw std::invalid_argument("gaussian_profile: sigma must be finite and > 0");
    }
    if (!std::isfinite(center) || center < 1.0 || center > static_cast<double>(n_sites)) {
        throw std::invalid_argument("gaussian_profile: center must lie in [1, n_sites]");
    }

    // Work with exponents shifted by their maximum so a very narrow
    // profile never underflows to the zero vector.
    Eigen::VectorXd exponents(n_sites);
    for (int i = 0; i < n_sites; ++i) {
        const double d = static_cast<double>(i + 1) - center;
        exponents[i] = -d * d / (2.0 * sigma * sigma);
    }
    const double shift = exponents.maxCoeff();

    Eigen::VectorXcd amplitudes(n_sites);
    double norm2 = 0.0;
    for (int i = 0; i < n_sites; ++i) {
        const double a = std::exp(exponents[i] - shift);
        amplitudes[i] = a;
        norm2 += a * a;
    }
    amplitudes /= std::sqrt(norm2);
    return AmplitudeProfile{std::move(amplitudes), kind};
}

CorrelationMatrix w_correlations(const AmplitudeProfile& profile) {
    if (profile.kind != ProfileKind::WState) {
        throw std::invalid_argument("w_correlations: profile is not a W-state");
    }
    const double norm2 = profile.amplitudes.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-9) {
        throw std::invalid_argument("w_correlations: W-state norm^2 is " + std::to_string(norm2) +
                                    ", expected 1");
    }
    return profile.amplitudes.conjugate() * profile.amplitudes.transpose();
}

CorrelationMatrix incoherent_correlations(const OccupationList& occupations) {
    for (Eigen::Index i = 0; i < occupations.size(); ++i) {
        if (!std::isfinite(occupations[i]) || occupations[i] < 0.0) {
            throw std::invalid_argument("incoherent_correlations: occupations must be finite and >= 0");
        }
    }
    return occupations.cast<std::complex<double>>().asDiagonal();
}

AmplitudeProfile apply_phase_mask(const AmplitudeProfile& profile,
                                  const Eigen::VectorXd& phases) {
    if (phases.size() != profile.amplitudes.size()) {
        throw std::invalid_argument("apply_phase_mask: phase vector length mismatch");
    }
    AmplitudeProfile masked = profile;
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        masked.amplitudes[i] *= std::polar(1.0, phases[i]);
    }
    return masked;
}

}  // namespace wbloch
