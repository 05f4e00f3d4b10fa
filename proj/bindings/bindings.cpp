#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wbloch/bessel.hpp"
#include "wbloch/errors.hpp"
#include "wbloch/fourier.hpp"
#include "wbloch/lattice.hpp"
#include "wbloch/observables.hpp"
#include "wbloch/propagator.hpp"
#include "wbloch/scenario.hpp"
#include "wbloch/splitter.hpp"
#include "wbloch/states.hpp"
#include "wbloch/twobeam.hpp"

namespace py = pybind11;
using namespace wbloch;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Single-photon W-state propagation in detuned waveguide arrays";

    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<NumericsError>(m, "NumericsError", PyExc_ArithmeticError);
    py::register_exception<SpectrumError>(m, "SpectrumError", PyExc_ValueError);

    py::enum_<PropagatorMethod>(m, "PropagatorMethod")
        .value("Analytic", PropagatorMethod::Analytic)
        .value("Numeric", PropagatorMethod::Numeric);

    py::enum_<ProfileKind>(m, "ProfileKind")
        .value("WState", ProfileKind::WState)
        .value("Coherent", ProfileKind::Coherent);

    py::enum_<InputKind>(m, "InputKind")
        .value("Fock", InputKind::Fock)
        .value("Coherent", InputKind::Coherent)
        .value("WState", InputKind::WState)
        .value("Incoherent", InputKind::Incoherent);

    py::class_<LatticeParams>(m, "LatticeParams")
        .def(py::init<int, double, int>(), py::arg("num_sites"), py::arg("alpha"),
             py::arg("site_origin") = 1)
        .def_readwrite("num_sites", &LatticeParams::num_sites)
        .def_readwrite("alpha", &LatticeParams::alpha)
        .def_readwrite("site_origin", &LatticeParams::site_origin)
        .def("__repr__", [](const LatticeParams& p) {
            return "LatticeParams(num_sites=" + std::to_string(p.num_sites) +
                   ", alpha=" + std::to_string(p.alpha) +
                   ", site_origin=" + std::to_string(p.site_origin) + ")";
        });

    py::class_<PropagatorMatrix>(m, "PropagatorMatrix")
        .def_readonly("g", &PropagatorMatrix::g)
        .def_readonly("tau", &PropagatorMatrix::tau)
        .def_readonly("method", &PropagatorMatrix::method)
        .def_readonly("params", &PropagatorMatrix::params);

    py::class_<AmplitudeProfile>(m, "AmplitudeProfile")
        .def(py::init<Eigen::VectorXcd, ProfileKind>(), py::arg("amplitudes"),
             py::arg("kind") = ProfileKind::WState)
        .def_readwrite("amplitudes", &AmplitudeProfile::amplitudes)
        .def_readwrite("kind", &AmplitudeProfile::kind);

    py::class_<CascadeSpec>(m, "CascadeSpec")
        .def(py::init<double, int>(), py::arg("transmissivity"), py::arg("stages_per_arm"))
        .def_readwrite("transmissivity", &CascadeSpec::transmissivity)
        .def_readwrite("stages_per_arm", &CascadeSpec::stages_per_arm)
        .def_property_readonly("total_ports", &CascadeSpec::total_ports);

    py::class_<CascadeResult>(m, "CascadeResult")
        .def_readonly("profile", &CascadeResult::profile)
        .def_readonly("residual_fraction", &CascadeResult::residual_fraction);

    py::class_<SpectralProfile>(m, "SpectralProfile")
        .def_readonly("k_grid", &SpectralProfile::k_grid)
        .def_readonly("values", &SpectralProfile::values);

    py::class_<IntensityMap>(m, "IntensityMap")
        .def_readonly("values", &IntensityMap::values)
        .def_readonly("tau_grid", &IntensityMap::tau_grid)
        .def_readonly("params", &IntensityMap::params)
        .def_readonly("input_descriptor", &IntensityMap::input_descriptor);

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init<>())
        .def_readwrite("input_kind", &ScenarioConfig::input_kind)
        .def_readwrite("profile_spec", &ScenarioConfig::profile_spec)
        .def_readwrite("sites", &ScenarioConfig::sites)
        .def_readwrite("alpha", &ScenarioConfig::alpha)
        .def_readwrite("tau_max", &ScenarioConfig::tau_max)
        .def_readwrite("tau_steps", &ScenarioConfig::tau_steps)
        .def_readwrite("method", &ScenarioConfig::method)
        .def_readwrite("csv_path", &ScenarioConfig::csv_path)
        .def_readwrite("svg_path", &ScenarioConfig::svg_path);

    m.def("build_hamiltonian", &build_hamiltonian, py::arg("params"));
    m.def("bessel_j", &bessel_j, py::arg("order"), py::arg("x"));
    m.def("diagonalize", &diagonalize, py::arg("params"));
    m.def("analytic_propagator", &analytic_propagator, py::arg("params"), py::arg("tau"));
    m.def("numeric_propagator",
          py::overload_cast<const LatticeParams&, double>(&numeric_propagator), py::arg("params"),
          py::arg("tau"));
    m.def("unitarity_defect", &unitarity_defect, py::arg("propagator"));

    m.def("gaussian_profile", &gaussian_profile, py::arg("n_sites"), py::arg("center"),
          py::arg("sigma"), py::arg("kind") = ProfileKind::WState);
    m.def("w_correlations", &w_correlations, py::arg("profile"));
    m.def("incoherent_correlations", &incoherent_correlations, py::arg("occupations"));
    m.def("apply_phase_mask", &apply_phase_mask, py::arg("profile"), py::arg("phases"));

    m.def("cascade_intensities", &cascade_intensities, py::arg("spec"));
    m.def("cascade_amplitudes", &cascade_amplitudes, py::arg("spec"));

    m.def("intensity_from_correlations", &intensity_from_correlations, py::arg("propagator"),
          py::arg("correlations"));
    m.def("intensity_wstate", &intensity_wstate, py::arg("propagator"), py::arg("profile"));
    m.def("intensity_coherent", &intensity_coherent, py::arg("propagator"), py::arg("amplitudes"));
    m.def("intensity_incoherent", &intensity_incoherent, py::arg("propagator"),
          py::arg("occupations"));

    m.def("c_tilde", &c_tilde, py::arg("profile"), py::arg("k"));
    m.def("spectral_profile", &spectral_profile, py::arg("profile"), py::arg("n_points") = 4097);
    m.def("intensity_via_integral", &intensity_via_integral, py::arg("profile"), py::arg("params"),
          py::arg("tau"), py::arg("quadrature_nodes") = 2048);
    m.def("approx_intensity", &approx_intensity, py::arg("profile"), py::arg("params"),
          py::arg("tau"));
    m.def("spectral_width", &spectral_width, py::arg("profile"), py::arg("grid_points") = 4096);
    m.def("bloch_period", &bloch_period, py::arg("alpha"));

    // the two-beam state is a std::variant of these three, converted
    // automatically at the boundary
    py::class_<twobeam::CoherentPair>(m, "CoherentPair")
        .def(py::init<std::complex<double>, std::complex<double>>(), py::arg("alpha1"),
             py::arg("alpha2"))
        .def_readwrite("alpha1", &twobeam::CoherentPair::alpha1)
        .def_readwrite("alpha2", &twobeam::CoherentPair::alpha2);
    py::class_<twobeam::FockPair>(m, "FockPair")
        .def(py::init<int, int>(), py::arg("n1"), py::arg("n2"))
        .def_readwrite("n1", &twobeam::FockPair::n1)
        .def_readwrite("n2", &twobeam::FockPair::n2);
    py::class_<twobeam::EntangledW>(m, "EntangledW").def(py::init<>());
    m.def("two_beam_cross_correlation", &two_beam_cross_correlation, py::arg("state"));
    m.def("two_beam_mean_occupations", &two_beam_mean_occupations, py::arg("state"));
    m.def("two_beam_intensity", &two_beam_intensity, py::arg("state"), py::arg("theta"));
    m.def("two_beam_visibility", &two_beam_visibility, py::arg("state"));

    m.def("build_profile", &build_profile, py::arg("spec"), py::arg("sites"), py::arg("kind"));
    m.def("run_scenario", &run_scenario, py::arg("config"));
    m.def("emit_csv", &emit_csv, py::arg("map"), py::arg("path"));
    m.def("emit_svg_heatmap", &emit_svg_heatmap, py::arg("map"), py::arg("path"));
}
