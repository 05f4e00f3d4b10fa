#include "wbloch/fourier.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "wbloch/errors.hpp"

namespace wbloch {

namespace {

using std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

// The transform sum with an explicit site-label base; 2 pi periodic in
// k by construction, so shifted arguments need no wrapping.
std::complex<double> transform_sum(const Eigen::VectorXcd& c, double k, int base_label) {
    std::complex<double> sum(0.0, 0.0);
    for (Eigen::Index j = 0; j < c.size(); ++j) {
        const double q = static_cast<double>(base_label + j);
        sum += c[j] * std::polar(1.0, -k * q);
    }
    return sum / std::sqrt(2.0 * pi);
}

}  // namespace

std::complex<double> c_tilde(const AmplitudeProfile& profile, double k) {
    if (!std::isfinite(k) || k < -pi - 1e-12 || k > pi + 1e-12) {
        throw std::invalid_argument("c_tilde: k must lie in [-pi, pi]");
    }
    return transform_sum(profile.amplitudes, k, 1);
}

SpectralProfile spectral_profile(const AmplitudeProfile& profile, int n_points) {
    if (n_points < 2) throw std::invalid_argument("spectral_profile: n_points must be >= 2");
    SpectralProfile spectrum;
    spectrum.k_grid.resize(n_points);
    spectrum.values.resize(n_points);
    for (int j = 0; j < n_points; ++j) {
        const double k = -pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(n_points - 1);
        spectrum.k_grid[j] = k;
        spectrum.values[j] = transform_sum(profile.amplitudes, k, 1);
    }
    return spectrum;
}

Eigen::VectorXd intensity_via_integral(const AmplitudeProfile& profile,
                                       const LatticeParams& params, double tau,
                                       int quadrature_nodes) {
    validate(params);
    if (params.alpha <= 0.0) {
        throw std::invalid_argument("intensity_via_integral: alpha must be > 0");
    }
    if (quadrature_nodes < 256) {
        throw std::invalid_argument("intensity_via_integral: need at least 256 quadrature nodes");
    }
    if (profile.amplitudes.size() != params.num_sites) {
        throw std::invalid_argument("intensity_via_integral: profile length mismatch");
    }
    const int n = params.num_sites;
    const int nodes = quadrature_nodes;
    const double alpha = params.alpha;
    const double h = 2.0 * pi / static_cast<double>(nodes);

    // Node-wise factor c~(k - a tau) * exp[(2i/a)(sin k - sin(k - a tau))].
    std::vector<std::complex<double>> weighted(static_cast<size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
        const double k = -pi + h * static_cast<double>(j);
        const double shifted = k - alpha * tau;
        const std::complex<double> spectral =
            transform_sum(profile.amplitudes, shifted, params.site_origin);
        const double chirp = (2.0 / alpha) * (std::sin(k) - std::sin(shifted));
        weighted[static_cast<size_t>(j)] = spectral * std::polar(1.0, chirp);
    }

    Eigen::VectorXd intensities(n);
    for (int i = 0; i < n; ++i) {
        const double p = static_cast<double>(params.site_origin + i);
        std::complex<double> amp(0.0, 0.0);
        for (int j = 0; j < nodes; ++j) {
            const double k = -pi + h * static_cast<double>(j);
            amp += weighted[static_cast<size_t>(j)] * std::polar(1.0, k * p);
        }
        amp *= h;
        intensities[i] = std::norm(amp) / (2.0 * pi);
    }
    return intensities;
}

Eigen::VectorXd approx_intensity(const AmplitudeProfile& profile, const LatticeParams& params,
                                 double tau) {
    validate(params);
    if (params.alpha <= 0.0) {
        throw std::invalid_argument("approx_intensity: alpha must be > 0");
    }
    if (profile.amplitudes.size() != params.num_sites) {
        throw std::invalid_argument("approx_intensity: profile length mismatch");
    }
    const int n = params.num_sites;
    const double s = std::sin(params.alpha * tau / 2.0);
    const double shift = (4.0 / params.alpha) * s * s;

    const Eigen::VectorXd marginals = profile.amplitudes.cwiseAbs2();
    Eigen::VectorXd intensities(n);
    for (int i = 0; i < n; ++i) {
        // Fractional index of the displaced envelope, in window coordinates.
        const double pos = static_cast<double>(i) - shift;
        if (pos <= -1.0 || pos >= static_cast<double>(n)) {
            intensities[i] = 0.0;
            continue;
        }
        const double lo = std::floor(pos);
        const double frac = pos - lo;
        const int ilo = static_cast<int>(lo);
        const double vlo = (ilo >= 0 && ilo < n) ? marginals[ilo] : 0.0;
        const double vhi = (ilo + 1 >= 0 && ilo + 1 < n) ? marginals[ilo + 1] : 0.0;
        intensities[i] = vlo + frac * (vhi - vlo);
    }
    return intensities;
}

double spectral_width(const AmplitudeProfile& profile, int grid_points) {
    if (grid_points < 4096) {
        throw std::invalid_argument("spectral_width: grid must have at least 4096 points");
    }
    const SpectralProfile spectrum = spectral_profile(profile, grid_points);
    const Eigen::VectorXd v = spectrum.values.cwiseAbs2();

    Eigen::Index peak = 0;
    const double vmax = v.maxCoeff(&peak);
    const double vmin = v.minCoeff();
    if (vmax <= 0.0 || vmax - vmin <= 1e-9 * vmax) {
        throw SpectrumError("spectral_width: spectrum is flat, width undefined");
    }
    if (peak == 0 || peak == v.size() - 1) {
        throw SpectrumError("spectral_width: peak sits at the edge of the k window");
    }

    // A well-defined half-height width needs the half level crossed
    // exactly twice.
    const double half = vmax / 2.0;
    int crossings = 0;
    for (Eigen::Index j = 0; j + 1 < v.size(); ++j) {
        if ((v[j] < half) != (v[j + 1] < half)) ++crossings;
    }
    if (crossings != 2) {
        throw SpectrumError("spectral_width: spectrum is not unimodal at half height");
    }

    auto interpolate = [&](Eigen::Index a, Eigen::Index b) {
        const double ka = spectrum.k_grid[a];
        const double kb = spectrum.k_grid[b];
        return ka + (kb - ka) * (half - v[a]) / (v[b] - v[a]);
    };
    Eigen::Index left = peak;
    while (left > 0 && v[left] >= half) --left;
    Eigen::Index right = peak;
    while (right < v.size() - 1 && v[right] >= half) ++right;
    if (v[left] >= half || v[right] >= half) {
        throw SpectrumError("spectral_width: half level not crossed on both sides of the peak");
    }
    return interpolate(right - 1, right) - interpolate(left + 1, left);
}

double bloch_period(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw std::invalid_argument("bloch_period: alpha must be finite and > 0");
    }
    return 2.0 * pi / alpha;
}

}  // namespace wbloch
