// wbloch: W-state Bloch-oscillation simulator for coupled waveguide
// arrays. Subcommands generate figure-grade CSV/SVG data for intensity
// maps, cascade profiles, momentum spectra and two-beam fringes.
#include <complex>
#include <exception>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "wbloch/errors.hpp"
#include "wbloch/fourier.hpp"
#include "wbloch/scenario.hpp"
#include "wbloch/splitter.hpp"
#include "wbloch/twobeam.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumerics = 4;

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw wbloch::IoError("cannot open '" + path + "' for writing");
    return f;
}

void write_profile_csv(const wbloch::AmplitudeProfile& profile, const std::string& path) {
    auto f = open_out(path);
    f << "site,re,im\n";
    for (Eigen::Index i = 0; i < profile.amplitudes.size(); ++i) {
        f << (i + 1) << ',' << wbloch::format_number(profile.amplitudes[i].real()) << ','
          << wbloch::format_number(profile.amplitudes[i].imag()) << '\n';
    }
    if (!f) throw wbloch::IoError("write failed for '" + path + "'");
}

wbloch::TwoBeamState parse_two_beam_state(const std::string& text) {
    if (text == "w") return wbloch::twobeam::EntangledW{};
    if (text == "fock") return wbloch::twobeam::FockPair{1, 1};
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    if (colon == std::string::npos || head != "fock") {
        if (head == "coherent" && colon != std::string::npos) {
            const std::string body = text.substr(colon + 1);
            const auto comma = body.find(',');
            if (comma == std::string::npos) {
                throw CLI::ValidationError("--state", "coherent needs two amplitudes: coherent:a1,a2");
            }
            try {
                const double a1 = std::stod(body.substr(0, comma));
                const double a2 = std::stod(body.substr(comma + 1));
                return wbloch::twobeam::CoherentPair{a1, a2};
            } catch (const std::exception&) {
                throw CLI::ValidationError("--state", "bad coherent amplitudes in '" + text + "'");
            }
        }
        throw CLI::ValidationError("--state", "expected w, fock[:n1,n2] or coherent:a1,a2");
    }
    const std::string body = text.substr(colon + 1);
    const auto comma = body.find(',');
    if (comma == std::string::npos) {
        throw CLI::ValidationError("--state", "fock needs two occupations: fock:n1,n2");
    }
    try {
        return wbloch::twobeam::FockPair{std::stoi(body.substr(0, comma)),
                                         std::stoi(body.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--state", "bad fock occupations in '" + text + "'");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"single-photon W-state propagation in detuned waveguide arrays"};
    app.require_subcommand(1);

    // --- simulate ---------------------------------------------------
    auto* simulate = app.add_subcommand("simulate", "intensity map I_p(tau) for a chosen input");
    wbloch::ScenarioConfig config;
    std::string input = "wstate";
    std::string method = "analytic";
    std::string sim_csv;
    std::string sim_svg;
    simulate->add_option("--input", input, "input class")
        ->check(CLI::IsMember({"fock", "coherent", "wstate", "incoherent"}))
        ->capture_default_str();
    simulate->add_option("--profile", config.profile_spec,
                         "site:<p> | gaussian:center=<r>,sigma=<r> | cascade:T=<r>,K=<i>")
        ->capture_default_str();
    simulate->add_option("--sites", config.sites, "number of waveguides")->capture_default_str();
    simulate->add_option("--alpha", config.alpha, "detuning gradient")->capture_default_str();
    simulate->add_option("--tau-max", config.tau_max, "end of the time grid")->capture_default_str();
    simulate->add_option("--tau-steps", config.tau_steps, "number of grid points")
        ->capture_default_str();
    simulate->add_option("--method", method, "propagator route")
        ->check(CLI::IsMember({"analytic", "numeric"}))
        ->capture_default_str();
    simulate->add_option("--out-csv", sim_csv, "CSV output path");
    simulate->add_option("--out-svg", sim_svg, "SVG heatmap output path");

    // --- cascade ----------------------------------------------------
    auto* cascade = app.add_subcommand("cascade", "W-state profile of the beam-splitter cascade");
    double transmissivity = 0.5;
    int stages = 13;
    std::string cascade_csv;
    cascade->add_option("--transmissivity", transmissivity, "splitter transmissivity T")
        ->capture_default_str();
    cascade->add_option("--stages", stages, "stages per arm K (2K ports)")->capture_default_str();
    cascade->add_option("--out-csv", cascade_csv, "profile CSV output path");

    // --- spectrum ---------------------------------------------------
    auto* spectrum = app.add_subcommand("spectrum", "momentum spectrum of a profile");
    std::string spectrum_profile = "cascade:T=0.5,K=13";
    int spectrum_sites = 26;
    int k_points = 4096;
    std::string spectrum_csv;
    spectrum->add_option("--profile", spectrum_profile, "profile spec")->capture_default_str();
    spectrum->add_option("--sites", spectrum_sites, "number of sites")->capture_default_str();
    spectrum->add_option("--k-points", k_points, "k grid size")->capture_default_str();
    spectrum->add_option("--out-csv", spectrum_csv, "spectrum CSV output path");

    // --- twobeam ----------------------------------------------------
    auto* twobeam_cmd = app.add_subcommand("twobeam", "two-beam fringe sweep");
    std::string state_text = "w";
    int theta_steps = 181;
    std::string twobeam_csv;
    twobeam_cmd->add_option("--state", state_text, "w | fock[:n1,n2] | coherent:a1,a2")
        ->capture_default_str();
    twobeam_cmd->add_option("--theta-steps", theta_steps, "points across [0, 2pi]")
        ->capture_default_str();
    twobeam_cmd->add_option("--out-csv", twobeam_csv, "fringe CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (simulate->parsed()) {
        config.input_kind = input == "fock"       ? wbloch::InputKind::Fock
                            : input == "coherent" ? wbloch::InputKind::Coherent
                            : input == "wstate"   ? wbloch::InputKind::WState
                                                  : wbloch::InputKind::Incoherent;
        config.method = method == "numeric" ? wbloch::PropagatorMethod::Numeric
                                            : wbloch::PropagatorMethod::Analytic;
        if (!sim_csv.empty()) config.csv_path = sim_csv;
        if (!sim_svg.empty()) config.svg_path = sim_svg;
        const wbloch::IntensityMap map = wbloch::run_scenario(config);
        std::cout << "simulated " << map.input_descriptor << ": " << map.tau_grid.size()
                  << " time steps x " << map.values.cols() << " sites, peak intensity "
                  << wbloch::format_number(map.values.maxCoeff()) << '\n';
        return kExitOk;
    }

    if (cascade->parsed()) {
        const wbloch::CascadeSpec spec{transmissivity, stages};
        const wbloch::CascadeResult result = wbloch::cascade_amplitudes(spec);
        if (!cascade_csv.empty()) write_profile_csv(result.profile, cascade_csv);
        std::cout << "cascade T=" << wbloch::format_number(transmissivity) << " K=" << stages
                  << ": " << spec.total_ports() << " ports, residual photon fraction "
                  << wbloch::format_number(result.residual_fraction) << '\n';
        return kExitOk;
    }

    if (spectrum->parsed()) {
        const wbloch::AmplitudeProfile profile =
            wbloch::build_profile(spectrum_profile, spectrum_sites, wbloch::ProfileKind::WState);
        const wbloch::SpectralProfile sp = wbloch::spectral_profile(profile, k_points);
        if (!spectrum_csv.empty()) {
            auto f = open_out(spectrum_csv);
            f << "k,re,im,abs2\n";
            for (Eigen::Index i = 0; i < sp.k_grid.size(); ++i) {
                f << wbloch::format_number(sp.k_grid[i]) << ','
                  << wbloch::format_number(sp.values[i].real()) << ','
                  << wbloch::format_number(sp.values[i].imag()) << ','
                  << wbloch::format_number(std::norm(sp.values[i])) << '\n';
            }
            if (!f) throw wbloch::IoError("write failed for '" + spectrum_csv + "'");
        }
        std::cout << "spectrum of " << spectrum_profile << ": ";
        try {
            std::cout << "FWHM " << wbloch::format_number(wbloch::spectral_width(profile)) << '\n';
        } catch (const wbloch::SpectrumError& e) {
            std::cout << "FWHM undefined (" << e.what() << ")\n";
        }
        return kExitOk;
    }

    // twobeam
    const wbloch::TwoBeamState state = parse_two_beam_state(state_text);
    if (theta_steps < 2) throw CLI::ValidationError("--theta-steps", "need at least 2 points");
    std::string body = "theta,intensity\n";
    for (int i = 0; i < theta_steps; ++i) {
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(theta_steps - 1);
        body += wbloch::format_number(theta);
        body += ',';
        body += wbloch::format_number(wbloch::two_beam_intensity(state, theta));
        body += '\n';
    }
    if (!twobeam_csv.empty()) {
        auto f = open_out(twobeam_csv);
        f << body;
        if (!f) throw wbloch::IoError("write failed for '" + twobeam_csv + "'");
    }
    std::cout << "two-beam sweep: visibility "
              << wbloch::format_number(wbloch::two_beam_visibility(state)) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const wbloch::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const wbloch::NumericsError& e) {
        std::cerr << "numerical contract violated: " << e.what() << '\n';
        return kExitNumerics;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
