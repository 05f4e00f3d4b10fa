#include "wbloch/splitter.hpp"

#include <cmath>
#include <stdexcept>

namespace wbloch {

void validate(const CascadeSpec& spec) {
    if (!std::isfinite(spec.transmissivity) || spec.transmissivity <= 0.0 ||
        spec.transmissivity > 1.0) {
        throw std::invalid_argument("CascadeSpec: transmissivity must be in (0, 1]");
    }
    if (spec.stages_per_arm < 1) {
        throw std::invalid_argument("CascadeSpec: stages_per_arm must be >= 1");
    }
}

Eigen::VectorXd cascade_intensities(const CascadeSpec& spec) {
    validate(spec);
    const int k = spec.stages_per_arm;
    const double t = spec.transmissivity;
    const double r = 1.0 - t;

    Eigen::VectorXd intensities(2 * k);
    // Innermost ports carry T/2; each step outward picks up another
    // reflection factor R. Right half mirrors the left exactly.
    double value = t / 2.0;
    for (int step = 0; step < k; ++step) {
        intensities[k - 1 - step] = value;
        intensities[k + step] = value;
        value *= r;
    }
    return intensities;
}

CascadeResult cascade_amplitudes(const CascadeSpec& spec) {
    const Eigen::VectorXd intensities = cascade_intensities(spec);
    const double total = intensities.sum();

    Eigen::VectorXcd c(intensities.size());
    for (Eigen::Index i = 0; i < intensities.size(); ++i) {
        c[i] = std::sqrt(intensities[i] / total);
    }
    const double residual = std::pow(1.0 - spec.transmissivity, spec.stages_per_arm);
    return CascadeResult{AmplitudeProfile{std::move(c), ProfileKind::WState}, residual};
}

}  // namespace wbloch
