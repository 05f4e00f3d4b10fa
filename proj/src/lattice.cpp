#include "wbloch/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wbloch {

void validate(const LatticeParams& params) {
    if (params.num_sites < 2) {
        throw std::invalid_argument("LatticeParams: num_sites must be >= 2, got " +
                                    std::to_string(params.num_sites));
    }
    if (!std::isfinite(params.alpha) || params.alpha < 0.0) {
        throw std::invalid_argument("LatticeParams: alpha must be finite and >= 0");
    }
}

Eigen::MatrixXd build_hamiltonian(const LatticeParams& params) {
    validate(params);
    const int n = params.num_sites;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = params.alpha * static_cast<double>(params.site_origin + i);
        if (i + 1 < n) {
            h(i, i + 1) = 1.0;
            h(i + 1, i) = 1.0;
        }
    }
    return h;
}

}  // namespace wbloch
