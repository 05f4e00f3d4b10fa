#include "wbloch/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wbloch {

namespace {

constexpr double kSeriesCutoff = 0.5;

// Ascending power series, safe for small arguments where no term in
// the alternating sum exceeds the leading one.
double series_jn(int n, double x) {
    const double half = 0.5 * x;
    double term = 1.0;
    for (int i = 1; i <= n; ++i) {
        term *= half / static_cast<double>(i);
        if (term == 0.0) return 0.0;  // underflow: J_n is below double range
    }
    const double h2 = half * half;
    double sum = term;
    for (int k = 1; k <= 200; ++k) {
        term *= -h2 / (static_cast<double>(k) * static_cast<double>(n + k));
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

// Start order for Miller's backward recurrence: past the turning point
// k ~ x the magnitudes fall off super-exponentially, so a margin of a
// few times x^(1/3) buries the contaminating solution below roundoff.
int miller_start(int order_max, double x) {
    const double xe = std::max(x, 1.0);
    const int margin = std::max(20, static_cast<int>(std::ceil(15.0 * std::cbrt(xe))));
    int m = std::max(order_max, static_cast<int>(std::ceil(x))) + margin;
    return m + (m & 1);
}

// Backward recurrence normalized with J_0 + 2*sum_{k even} J_k = 1.
// Values are rescaled on the fly when they grow past 1e250 so the
// recurrence survives the huge dynamic range at small x / large order.
std::vector<double> miller_row(int order_max, double x) {
    const int start = miller_start(order_max, x);
    std::vector<double> row(static_cast<size_t>(order_max) + 1, 0.0);

    double jp = 0.0;    // J_{k+1}
    double jc = 1e-30;  // J_k (arbitrary seed, fixed by normalization)
    double norm = 0.0;  // accumulates J_0 + 2*sum_{even k>=2} J_k
    constexpr double kRescale = 1e250;

    for (int k = start; k >= 0; --k) {
        if (k <= order_max) row[static_cast<size_t>(k)] = jc;
        if (k % 2 == 0) norm += (k == 0) ? jc : 2.0 * jc;
        const double jm = (2.0 * (k)) / x * jc - jp;  // J_{k-1}
        jp = jc;
        jc = jm;
        if (std::abs(jc) > kRescale) {
            jc /= kRescale;
            jp /= kRescale;
            norm /= kRescale;
            for (double& v : row) v /= kRescale;
        }
    }
    for (double& v : row) v /= norm;
    return row;
}

void check_args(int order, double x) {
    if (order > kBesselMaxOrder || order < -kBesselMaxOrder) {
        throw std::invalid_argument("bessel_j: |order| > " + std::to_string(kBesselMaxOrder));
    }
    if (!std::isfinite(x) || std::abs(x) > kBesselMaxArg) {
        throw std::invalid_argument("bessel_j: x must be finite with |x| <= 1000");
    }
}

}  // namespace

std::vector<double> bessel_j_row(int order_max, double x) {
    if (order_max < 0) throw std::invalid_argument("bessel_j_row: order_max must be >= 0");
    check_args(order_max, x);
    if (x < 0.0) throw std::invalid_argument("bessel_j_row: x must be >= 0");

    std::vector<double> row(static_cast<size_t>(order_max) + 1, 0.0);
    if (x == 0.0) {
        row[0] = 1.0;
        return row;
    }
    if (x < kSeriesCutoff) {
        for (int n = 0; n <= order_max; ++n) row[static_cast<size_t>(n)] = series_jn(n, x);
        return row;
    }
    return miller_row(order_max, x);
}

double bessel_j(int order, double x) {
    check_args(order, x);
    const int n = std::abs(order);
    const double ax = std::abs(x);

    double value;
    if (ax == 0.0) {
        value = (n == 0) ? 1.0 : 0.0;
    } else if (ax < kSeriesCutoff) {
        value = series_jn(n, ax);
    } else {
        value = miller_row(n, ax)[static_cast<size_t>(n)];
    }

    // J_{-n}(x) = (-1)^n J_n(x) and J_n(-x) = (-1)^n J_n(x).
    if (n % 2 == 1) {
        if (order < 0) value = -value;
        if (x < 0.0) value = -value;
    }
    return value;
}

}  // namespace wbloch
