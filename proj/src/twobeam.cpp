#include "wbloch/twobeam.hpp"

#include <cmath>
#include <stdexcept>

namespace wbloch {

namespace {

void check(const TwoBeamState& state) {
    if (const auto* fock = std::get_if<twobeam::FockPair>(&state)) {
        if (fock->n1 < 0 || fock->n2 < 0) {
            throw std::invalid_argument("FockPair occupations must be >= 0");
        }
    } else if (const auto* coh = std::get_if<twobeam::CoherentPair>(&state)) {
        if (!std::isfinite(std::abs(coh->alpha1)) || !std::isfinite(std::abs(coh->alpha2))) {
            throw std::invalid_argument("coherent amplitudes must be finite");
        }
    }
}

}  // namespace

std::complex<double> two_beam_cross_correlation(const TwoBeamState& state) {
    check(state);
    return std::visit(
        [](const auto& s) -> std::complex<double> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, twobeam::CoherentPair>) {
                return std::conj(s.alpha1) * s.alpha2;
            } else if constexpr (std::is_same_v<T, twobeam::FockPair>) {
                return 0.0;
            } else {
                return 0.5;
            }
        },
        state);
}

std::pair<double, double> two_beam_mean_occupations(const TwoBeamState& state) {
    check(state);
    return std::visit(
        [](const auto& s) -> std::pair<double, double> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, twobeam::CoherentPair>) {
                return {std::norm(s.alpha1), std::norm(s.alpha2)};
            } else if constexpr (std::is_same_v<T, twobeam::FockPair>) {
                return {static_cast<double>(s.n1), static_cast<double>(s.n2)};
            } else {
                return {0.5, 0.5};
            }
        },
        state);
}

double two_beam_intensity(const TwoBeamState& state, double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
    const auto [n1, n2] = two_beam_mean_occupations(state);
    const std::complex<double> cross = two_beam_cross_correlation(state);
    const std::complex<double> rot = std::polar(1.0, theta);
    return (n1 + n2 + 2.0 * (rot * cross).real()) / 2.0;
}

double two_beam_visibility(const TwoBeamState& state) {
    const auto [n1, n2] = two_beam_mean_occupations(state);
    const double total = n1 + n2;
    if (total == 0.0) return 0.0;
    return 2.0 * std::abs(two_beam_cross_correlation(state)) / total;
}

}  // namespace wbloch
