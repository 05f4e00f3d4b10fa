"""Single-photon W-state propagation in detuned waveguide arrays.

Thin Python facade over the compiled core: lattice Hamiltonians, the
closed-form Bessel propagator and its spectral-synthesis twin, input
states (W-state, coherent, incoherent), the beam-splitter cascade,
momentum-space analysis and scenario emission.
"""

from ._core import (
    AmplitudeProfile,
    CascadeResult,
    CascadeSpec,
    CoherentPair,
    EntangledW,
    FockPair,
    InputKind,
    IntensityMap,
    IoError,
    LatticeParams,
    NumericsError,
    ProfileKind,
    PropagatorMatrix,
    PropagatorMethod,
    ScenarioConfig,
    SpectralProfile,
    SpectrumError,
    analytic_propagator,
    apply_phase_mask,
    approx_intensity,
    bessel_j,
    bloch_period,
    build_hamiltonian,
    build_profile,
    c_tilde,
    cascade_amplitudes,
    cascade_intensities,
    diagonalize,
    emit_csv,
    emit_svg_heatmap,
    gaussian_profile,
    incoherent_correlations,
    intensity_coherent,
    intensity_from_correlations,
    intensity_incoherent,
    intensity_via_integral,
    intensity_wstate,
    numeric_propagator,
    run_scenario,
    spectral_profile,
    spectral_width,
    two_beam_cross_correlation,
    two_beam_intensity,
    two_beam_mean_occupations,
    two_beam_visibility,
    unitarity_defect,
    w_correlations,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
