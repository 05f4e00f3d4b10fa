#pragma once

#include <optional>
#include <string>

#include "wbloch/observables.hpp"
#include "wbloch/propagator.hpp"
#include "wbloch/states.hpp"

namespace wbloch {

enum class InputKind { Fock, Coherent, WState, Incoherent };

/// One simulation run: an input class, a profile specification
/// ("site:<p>", "gaussian:center=<r>,sigma=<r>" or
/// "cascade:T=<r>,K=<i>"), the lattice, a uniform tau grid and the
/// files to emit.
struct ScenarioConfig {
    InputKind input_kind = InputKind::WState;
    std::string profile_spec = "cascade:T=0.5,K=13";
    int sites = 26;
    double alpha = 0.5;
    double tau_max = 25.0;
    int tau_steps = 500;
    PropagatorMethod method = PropagatorMethod::Analytic;
    std::optional<std::string> csv_path;
    std::optional<std::string> svg_path;
};

/// Parses a profile spec string into the amplitude profile it denotes,
/// sized for `sites` sites. Throws std::invalid_argument for malformed
/// specs or size inconsistencies (e.g. cascade with 2K != sites).
AmplitudeProfile build_profile(const std::string& spec, int sites, ProfileKind kind);

/// Runs the configured scenario and writes any requested outputs.
/// Output bytes are a pure function of the config.
IntensityMap run_scenario(const ScenarioConfig& config);

/// CSV with header `tau,site,intensity`, rows ordered by (time, site),
/// numbers printed with up to 9 significant digits (shortest form).
void emit_csv(const IntensityMap& map, const std::string& path);

/// Standalone SVG heatmap: columns are time steps, rows are sites,
/// cells on a linear grayscale normalized by the map maximum (stated
/// in the figure as text).
void emit_svg_heatmap(const IntensityMap& map, const std::string& path);

/// Pinned number format used by all emitters: up to 9 significant
/// digits, shortest decimal form.
std::string format_number(double value);

}  // namespace wbloch
