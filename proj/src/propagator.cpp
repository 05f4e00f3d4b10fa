#include "wbloch/propagator.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "wbloch/bessel.hpp"
#include "wbloch/errors.hpp"

namespace wbloch {

namespace {

constexpr double kAlphaZeroThreshold = 1e-10;
constexpr double kNumericUnitarityTol = 1e-10;

void check_tau(double tau) {
    if (!std::isfinite(tau) || tau < 0.0) {
        throw std::invalid_argument("propagator: tau must be finite and >= 0");
    }
}

// J_{m}(x) for signed order m from a row of nonnegative orders at |x|.
double signed_order_j(const std::vector<double>& row, int m, bool x_negative) {
    const int n = std::abs(m);
    double v = row[static_cast<size_t>(n)];
    if (n % 2 == 1) {
        if (m < 0) v = -v;
        if (x_negative) v = -v;
    }
    return v;
}

}  // namespace

TridiagonalSpectrum diagonalize(const LatticeParams& params) {
    validate(params);
    const int n = params.num_sites;
    Eigen::VectorXd diag(n);
    for (int i = 0; i < n; ++i) {
        diag[i] = params.alpha * static_cast<double>(params.site_origin + i);
    }
    const Eigen::VectorXd subdiag = Eigen::VectorXd::Ones(n - 1);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw NumericsError("diagonalize: tridiagonal eigensolver failed to converge");
    }
    return TridiagonalSpectrum{solver.eigenvalues(), solver.eigenvectors(), params};
}

PropagatorMatrix analytic_propagator(const LatticeParams& params, double tau) {
    validate(params);
    check_tau(tau);
    const int n = params.num_sites;
    const double alpha = params.alpha;

    double arg;
    if (alpha < kAlphaZeroThreshold) {
        arg = 2.0 * tau;
    } else {
        arg = (4.0 / alpha) * std::sin(alpha * tau / 2.0);
    }
    const bool arg_negative = arg < 0.0;
    const std::vector<double> jrow = bessel_j_row(n - 1, std::abs(arg));

    const double half_ramp = (alpha * tau - std::numbers::pi) / 2.0;
    Eigen::MatrixXcd g(n, n);
    for (int j = 0; j < n; ++j) {
        const double q = static_cast<double>(params.site_origin + j);
        const double column_phase = alpha * q * tau;
        for (int i = 0; i < n; ++i) {
            const double phase = column_phase + static_cast<double>(i - j) * half_ramp;
            const double jval = signed_order_j(jrow, j - i, arg_negative);
            g(i, j) = std::polar(jval, phase);
        }
    }
    return PropagatorMatrix{std::move(g), tau, PropagatorMethod::Analytic, params};
}

PropagatorMatrix numeric_propagator(const TridiagonalSpectrum& spectrum, double tau) {
    check_tau(tau);
    const int n = spectrum.params.num_sites;
    const std::complex<double> minus_i(0.0, -1.0);

    Eigen::VectorXcd phases(n);
    for (int i = 0; i < n; ++i) {
        phases[i] = std::exp(minus_i * spectrum.eigenvalues[i] * tau);
    }
    const Eigen::MatrixXcd v = spectrum.eigenvectors.cast<std::complex<double>>();
    Eigen::MatrixXcd g = v * phases.asDiagonal() * v.transpose();

    PropagatorMatrix result{std::move(g), tau, PropagatorMethod::Numeric, spectrum.params};
    const double defect = unitarity_defect(result);
    if (defect > kNumericUnitarityTol) {
        throw NumericsError("numeric_propagator: unitarity defect " + std::to_string(defect) +
                            " exceeds tolerance");
    }
    return result;
}

PropagatorMatrix numeric_propagator(const LatticeParams& params, double tau) {
    return numeric_propagator(diagonalize(params), tau);
}

double unitarity_defect(const PropagatorMatrix& propagator) {
    const auto& g = propagator.g;
    const Eigen::MatrixXcd gram = g.adjoint() * g;
    const Eigen::MatrixXcd identity =
        Eigen::MatrixXcd::Identity(g.rows(), g.cols());
    return (gram - identity).cwiseAbs().maxCoeff();
}

}  // namespace wbloch
