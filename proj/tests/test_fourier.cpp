#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "bessel_oracle.hpp"
#include "wbloch/errors.hpp"
#include "wbloch/fourier.hpp"
#include "wbloch/observables.hpp"
#include "wbloch/propagator.hpp"
#include "wbloch/splitter.hpp"
#include "wbloch/states.hpp"

using namespace wbloch;
using std::numbers::pi;

TEST_CASE("single-site spectrum is a pure phase") {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(10);
    c[3] = 1.0;  // site 4
    const AmplitudeProfile profile{c, ProfileKind::WState};
    for (double k : {-3.0, -0.4, 0.0, 1.9, pi}) {
        const std::complex<double> value = c_tilde(profile, k);
        CHECK(std::abs(value) == doctest::Approx(1.0 / std::sqrt(2.0 * pi)).epsilon(1e-13));
        CHECK(std::arg(value) == doctest::Approx(std::arg(std::polar(1.0, -4.0 * k))).epsilon(1e-10));
    }
    CHECK_THROWS_AS((void)c_tilde(profile, 3.5), std::invalid_argument);
}

TEST_CASE("flat profile gives a Dirichlet kernel") {
    const int n = 12;
    const AmplitudeProfile profile{Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(12.0)),
                                   ProfileKind::WState};
    for (double k : {-2.0, -0.31, 0.27, 1.4}) {
        const double direct = std::norm(c_tilde(profile, k));
        const double dirichlet =
            std::pow(std::sin(n * k / 2.0) / std::sin(k / 2.0), 2) / (2.0 * pi * n);
        CHECK(direct == doctest::Approx(dirichlet).epsilon(1e-11));
    }
    // peak at k = 0
    CHECK(std::norm(c_tilde(profile, 0.0)) ==
          doctest::Approx(static_cast<double>(n) / (2.0 * pi)).epsilon(1e-12));
}

TEST_CASE("Parseval identity on the sampled spectrum") {
    const AmplitudeProfile cascade = cascade_amplitudes({0.5, 13}).profile;
    const AmplitudeProfile gauss = gaussian_profile(26, 13.0, 3.6, ProfileKind::WState);
    for (const AmplitudeProfile& profile : {cascade, gauss}) {
        const SpectralProfile sp = spectral_profile(profile, 4097);
        // periodic trapezoid: endpoints coincide, so drop one
        double integral = 0.0;
        const double h = sp.k_grid[1] - sp.k_grid[0];
        for (Eigen::Index j = 0; j + 1 < sp.k_grid.size(); ++j) {
            integral += std::norm(sp.values[j]);
        }
        integral *= h;
        CHECK(integral == doctest::Approx(profile.amplitudes.squaredNorm()).epsilon(1e-8));
    }
}

TEST_CASE("integral route reduces to the marginals at tau 0") {
    const AmplitudeProfile profile = cascade_amplitudes({0.5, 13}).profile;
    const LatticeParams params{26, 0.5, 1};
    const Eigen::VectorXd via_integral = intensity_via_integral(profile, params, 0.0, 512);
    for (int i = 0; i < 26; ++i) {
        CHECK(via_integral[i] ==
              doctest::Approx(std::norm(profile.amplitudes[i])).epsilon(1e-10));
    }
}

TEST_CASE("integral route equals the site-space propagator") {
    const AmplitudeProfile profile = cascade_amplitudes({0.5, 13}).profile;
    const LatticeParams params{26, 0.5, 1};
    for (double tau : {0.9, pi, 2.0 * pi}) {
        const Eigen::VectorXd exact = intensity_wstate(analytic_propagator(params, tau), profile);
        const Eigen::VectorXd integral = intensity_via_integral(profile, params, tau, 2048);
        CHECK((exact - integral).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("integral route reproduces the single-site Bessel law") {
    const LatticeParams params{26, 0.5, 1};
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(26);
    c[12] = 1.0;
    const AmplitudeProfile profile{c, ProfileKind::WState};
    const double tau = 2.0 * pi;
    const double arg = 8.0 * std::sin(tau / 4.0);
    const Eigen::VectorXd integral = intensity_via_integral(profile, params, tau, 2048);
    for (int i = 0; i < 26; ++i) {
        const double j = bessel_series_oracle(i - 12, arg);
        CHECK(std::abs(integral[i] - j * j) <= 1e-8);
    }
}

TEST_CASE("envelope approximation is exact at revivals") {
    const AmplitudeProfile profile = gaussian_profile(26, 13.0, 3.6, ProfileKind::WState);
    const LatticeParams params{26, 0.5, 1};
    const double period = bloch_period(0.5);
    for (int m : {0, 1, 2}) {
        const Eigen::VectorXd approx = approx_intensity(profile, params, m * period);
        for (int i = 0; i < 26; ++i) {
            CHECK(approx[i] ==
                  doctest::Approx(std::norm(profile.amplitudes[i])).epsilon(1e-9));
        }
        // the exact map also revives
        const Eigen::VectorXd exact =
            intensity_wstate(analytic_propagator(params, m * period), profile);
        CHECK((exact - approx).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("envelope approximation displaces the profile by 8 sites at half period") {
    const AmplitudeProfile profile = gaussian_profile(26, 13.0, 3.6, ProfileKind::WState);
    const LatticeParams params{26, 0.5, 1};
    const double tau = 2.0 * pi;  // (4/0.5) sin^2(pi/2) = 8
    const Eigen::VectorXd approx = approx_intensity(profile, params, tau);
    int approx_peak = 0;
    approx.maxCoeff(&approx_peak);
    CHECK(approx_peak == 20);  // site 21 = 13 + 8

    const Eigen::VectorXd exact = intensity_wstate(analytic_propagator(params, tau), profile);
    int exact_peak = 0;
    exact.maxCoeff(&exact_peak);
    CHECK(std::abs(exact_peak - approx_peak) <= 1);
}

TEST_CASE("approximation error shrinks as the spectrum narrows") {
    // wider site profile -> narrower spectrum -> better envelope shift
    const LatticeParams params{64, 0.5, 1};
    const double tau = bloch_period(0.5) / 2.0;
    double previous = std::numeric_limits<double>::infinity();
    for (double sigma : {1.8, 3.6, 7.2}) {
        const AmplitudeProfile profile = gaussian_profile(64, 32.0, sigma, ProfileKind::WState);
        const Eigen::VectorXd exact = intensity_wstate(analytic_propagator(params, tau), profile);
        const Eigen::VectorXd approx = approx_intensity(profile, params, tau);
        const double l1 = (exact - approx).cwiseAbs().sum();
        CHECK(l1 < previous);
        previous = l1;
    }
}

TEST_CASE("spectral widths") {
    SUBCASE("gaussian profile matches the transform-pair width") {
        const AmplitudeProfile profile = gaussian_profile(26, 13.0, 3.6, ProfileKind::WState);
        const double width = spectral_width(profile);
        CHECK(width == doctest::Approx(2.0 * std::sqrt(std::log(2.0)) / 3.6).epsilon(0.02));
    }
    SUBCASE("single-site profile is flat and has no width") {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(26);
        c[12] = 1.0;
        CHECK_THROWS_AS((void)spectral_width({c, ProfileKind::WState}), SpectrumError);
    }
    SUBCASE("edge-peaked spectrum is rejected") {
        // alternating signs push the spectral peak to k = +-pi
        AmplitudeProfile profile = gaussian_profile(26, 13.0, 3.6, ProfileKind::WState);
        for (int i = 0; i < 26; ++i) {
            if (i % 2 == 1) profile.amplitudes[i] = -profile.amplitudes[i];
        }
        CHECK_THROWS_AS((void)spectral_width(profile), SpectrumError);
    }
    SUBCASE("default cascade profile is unimodal with a reportable width") {
        const AmplitudeProfile profile = cascade_amplitudes({0.5, 13}).profile;
        const double width = spectral_width(profile);
        MESSAGE("default cascade spectral width: ", width);
        CHECK(width > 0.0);
        CHECK(width < pi);
    }
}

TEST_CASE("bloch period") {
    CHECK(bloch_period(0.5) == doctest::Approx(4.0 * pi).epsilon(1e-15));
    CHECK(bloch_period(2.0) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(bloch_period(1.0) == doctest::Approx(2.0 * pi).epsilon(1e-15));
    CHECK_THROWS_AS((void)bloch_period(0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)bloch_period(-1.0), std::invalid_argument);
}

TEST_CASE("fourier input validation") {
    const AmplitudeProfile profile = cascade_amplitudes({0.5, 13}).profile;
    const LatticeParams params{26, 0.5, 1};
    CHECK_THROWS_AS((void)intensity_via_integral(profile, params, 1.0, 128),
                    std::invalid_argument);
    const LatticeParams no_gradient{26, 0.0, 1};
    CHECK_THROWS_AS((void)intensity_via_integral(profile, no_gradient, 1.0, 512),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)approx_intensity(profile, no_gradient, 1.0), std::invalid_argument);
    const LatticeParams wrong_size{13, 0.5, 1};
    CHECK_THROWS_AS((void)intensity_via_integral(profile, wrong_size, 1.0, 512),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)spectral_width(profile, 100), std::invalid_argument);
}
