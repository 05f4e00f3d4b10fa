#pragma once

#include <complex>
#include <utility>
#include <variant>

namespace wbloch {

/// Two-beam input states for the 50/50 interference demonstrator.
namespace twobeam {

struct CoherentPair {
    std::complex<double> alpha1;
    std::complex<double> alpha2;
};

struct FockPair {
    int n1 = 0;
    int n2 = 0;
};

/// The entangled single photon (|1,0> + |0,1>)/sqrt(2).
struct EntangledW {};

}  // namespace twobeam

using TwoBeamState = std::variant<twobeam::CoherentPair, twobeam::FockPair, twobeam::EntangledW>;

/// <a_1^dag a_2>: conj(alpha1)*alpha2 for coherent beams, 0 for any
/// Fock pair, 1/2 for the entangled single photon.
std::complex<double> two_beam_cross_correlation(const TwoBeamState& state);

/// {<n_1>, <n_2>}.
std::pair<double, double> two_beam_mean_occupations(const TwoBeamState& state);

/// Mean intensity behind the combiner b = (a_1 + e^{i theta} a_2)/sqrt(2):
///   [<n_1> + <n_2> + 2 Re(e^{i theta} <a_1^dag a_2>)] / 2.
double two_beam_intensity(const TwoBeamState& state, double theta);

/// Fringe visibility 2 |<a_1^dag a_2>| / (<n_1> + <n_2>); 0 for the
/// vacuum.
double two_beam_visibility(const TwoBeamState& state);

}  // namespace wbloch
