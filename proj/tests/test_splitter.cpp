#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "wbloch/splitter.hpp"

using namespace wbloch;

TEST_CASE("six-port pattern matches the symbolic law") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.05, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const double t = dist(rng);
        const double r = 1.0 - t;
        const Eigen::VectorXd i = cascade_intensities({t, 3});
        REQUIRE(i.size() == 6);
        CHECK(i[0] == doctest::Approx(t * r * r / 2.0).epsilon(1e-14));
        CHECK(i[1] == doctest::Approx(t * r / 2.0).epsilon(1e-14));
        CHECK(i[2] == doctest::Approx(t / 2.0).epsilon(1e-14));
        CHECK(i[3] == doctest::Approx(t / 2.0).epsilon(1e-14));
        CHECK(i[4] == doctest::Approx(t * r / 2.0).epsilon(1e-14));
        CHECK(i[5] == doctest::Approx(t * r * r / 2.0).epsilon(1e-14));
    }
}

TEST_CASE("perfect transmission exits at the first stage") {
    const Eigen::VectorXd i = cascade_intensities({1.0, 3});
    CHECK(i[0] == 0.0);
    CHECK(i[1] == 0.0);
    CHECK(i[2] == 0.5);
    CHECK(i[3] == 0.5);
    CHECK(i[4] == 0.0);
    CHECK(i[5] == 0.0);
}

TEST_CASE("intensities sum to the extracted fraction 1 - R^K") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> tdist(0.05, 1.0);
    std::uniform_int_distribution<int> kdist(1, 20);
    for (int trial = 0; trial < 30; ++trial) {
        const double t = tdist(rng);
        const int k = kdist(rng);
        const double total = cascade_intensities({t, k}).sum();
        CHECK(std::abs(total - (1.0 - std::pow(1.0 - t, k))) <= 1e-14);
    }
    // the 26-port default
    CHECK(cascade_intensities({0.5, 13}).sum() == doctest::Approx(0.9998779296875).epsilon(1e-14));
}

TEST_CASE("single stage with perfect transmission is a 50/50 split") {
    const CascadeResult result = cascade_amplitudes({1.0, 1});
    REQUIRE(result.profile.amplitudes.size() == 2);
    CHECK(std::abs(result.profile.amplitudes[0]) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(result.profile.amplitudes[1]) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(result.residual_fraction == 0.0);
}

TEST_CASE("cascade amplitudes are normalized, mirror-symmetric and decay outward") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> tdist(0.05, 0.999);
    std::uniform_int_distribution<int> kdist(1, 16);
    for (int trial = 0; trial < 20; ++trial) {
        const double t = tdist(rng);
        const int k = kdist(rng);
        const CascadeResult result = cascade_amplitudes({t, k});
        const auto& c = result.profile.amplitudes;
        REQUIRE(c.size() == 2 * k);
        CHECK(result.profile.kind == ProfileKind::WState);
        CHECK(std::abs(c.squaredNorm() - 1.0) <= 1e-14);
        CHECK(result.residual_fraction == doctest::Approx(std::pow(1.0 - t, k)).epsilon(1e-14));
        for (int p = 0; p < k; ++p) {
            CHECK(c[p] == c[2 * k - 1 - p]);  // exact mirror
            if (p > 0) CHECK(std::abs(c[p]) >= std::abs(c[p - 1]));  // grows toward center
        }
    }
}

TEST_CASE("geometric decay of the default profile") {
    const CascadeResult result = cascade_amplitudes({0.5, 13});
    const auto& c = result.profile.amplitudes;
    // |c| falls by sqrt(R) per port moving outward from the two
    // central ports
    for (int p = 12; p > 0; --p) {
        CHECK(std::abs(c[p - 1]) / std::abs(c[p]) ==
              doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    }
    int peak = 0;
    c.cwiseAbs().maxCoeff(&peak);
    CHECK((peak == 12 || peak == 13));
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS((void)cascade_intensities({0.0, 3}), std::invalid_argument);
    CHECK_THROWS_AS((void)cascade_intensities({1.2, 3}), std::invalid_argument);
    CHECK_THROWS_AS((void)cascade_intensities({-0.5, 3}), std::invalid_argument);
    CHECK_THROWS_AS((void)cascade_intensities({0.5, 0}), std::invalid_argument);
}
