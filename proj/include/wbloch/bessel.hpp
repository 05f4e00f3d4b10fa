#pragma once

#include <vector>

namespace wbloch {

/// Largest |order| and |argument| the Bessel routines accept.
inline constexpr int kBesselMaxOrder = 500;
inline constexpr double kBesselMaxArg = 1000.0;

/// Integer-order Bessel function of the first kind, J_n(x).
/// Absolute error <= 1e-12 over the supported range; negative orders
/// follow J_{-n}(x) = (-1)^n J_n(x).
/// Throws std::invalid_argument for |order| > 500, |x| > 1000 or
/// non-finite x.
double bessel_j(int order, double x);

/// J_0(x), ..., J_{order_max}(x) in one backward-recurrence pass,
/// for x >= 0. Same accuracy and range contract as bessel_j.
std::vector<double> bessel_j_row(int order_max, double x);

}  // namespace wbloch
