#include "wbloch/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <vector>

#include "wbloch/errors.hpp"
#include "wbloch/splitter.hpp"

namespace wbloch {

namespace {

double parse_double(const std::string& text, const std::string& what) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("profile spec: bad " + what + " value '" + text + "'");
    }
    return value;
}

int parse_int(const std::string& text, const std::string& what) {
    int value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("profile spec: bad " + what + " value '" + text + "'");
    }
    return value;
}

// Splits "key=value,key=value" into pairs, order-sensitive.
std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& body) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream stream(body);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("profile spec: expected key=value, got '" + item + "'");
        }
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    return file;
}

}  // namespace

std::string format_number(double value) {
    char buffer[64];
    const auto [ptr, ec] =
        std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 9);
    if (ec != std::errc()) throw std::invalid_argument("format_number: unformattable value");
    return std::string(buffer, ptr);
}

AmplitudeProfile build_profile(const std::string& spec, int sites, ProfileKind kind) {
    if (sites < 1) throw std::invalid_argument("build_profile: sites must be >= 1");
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (head == "site") {
        const int site = parse_int(body, "site");
        if (site < 1 || site > sites) {
            throw std::invalid_argument("profile spec: site " + std::to_string(site) +
                                        " outside 1.." + std::to_string(sites));
        }
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(sites);
        c[site - 1] = 1.0;
        return AmplitudeProfile{std::move(c), kind};
    }
    if (head == "gaussian") {
        double center = std::nan("");
        double sigma = std::nan("");
        for (const auto& [key, value] : parse_kv(body)) {
            if (key == "center") {
                center = parse_double(value, "center");
            } else if (key == "sigma") {
                sigma = parse_double(value, "sigma");
            } else {
                throw std::invalid_argument("profile spec: unknown gaussian key '" + key + "'");
            }
        }
        if (std::isnan(center) || std::isnan(sigma)) {
            throw std::invalid_argument("profile spec: gaussian needs center=<r>,sigma=<r>");
        }
        AmplitudeProfile profile = gaussian_profile(sites, center, sigma, kind);
        return profile;
    }
    if (head == "cascade") {
        double t = std::nan("");
        int k = 0;
        for (const auto& [key, value] : parse_kv(body)) {
            if (key == "T") {
                t = parse_double(value, "T");
            } else if (key == "K") {
                k = parse_int(value, "K");
            } else {
                throw std::invalid_argument("profile spec: unknown cascade key '" + key + "'");
            }
        }
        if (std::isnan(t) || k == 0) {
            throw std::invalid_argument("profile spec: cascade needs T=<r>,K=<i>");
        }
        const CascadeSpec cascade{t, k};
        if (cascade.total_ports() != sites) {
            throw std::invalid_argument("profile spec: cascade has " +
                                        std::to_string(cascade.total_ports()) + " ports, lattice has " +
                                        std::to_string(sites) + " sites");
        }
        AmplitudeProfile profile = cascade_amplitudes(cascade).profile;
        profile.kind = kind;
        return profile;
    }
    throw std::invalid_argument("profile spec: unknown form '" + head + "'");
}

IntensityMap run_scenario(const ScenarioConfig& config) {
    if (config.tau_steps < 2) throw std::invalid_argument("scenario: tau_steps must be >= 2");
    if (!(config.tau_max > 0.0) || !std::isfinite(config.tau_max)) {
        throw std::invalid_argument("scenario: tau_max must be finite and > 0");
    }
    const LatticeParams params{config.sites, config.alpha, 1};
    validate(params);

    const ProfileKind kind =
        config.input_kind == InputKind::Coherent ? ProfileKind::Coherent : ProfileKind::WState;
    const AmplitudeProfile profile = build_profile(config.profile_spec, config.sites, kind);
    const OccupationList occupations = profile.amplitudes.cwiseAbs2();

    IntensityMap map;
    map.params = params;
    map.tau_grid.resize(config.tau_steps);
    map.values.resize(config.tau_steps, config.sites);

    std::optional<TridiagonalSpectrum> spectrum;
    if (config.method == PropagatorMethod::Numeric) spectrum = diagonalize(params);

    for (int step = 0; step < config.tau_steps; ++step) {
        const double tau =
            config.tau_max * static_cast<double>(step) / static_cast<double>(config.tau_steps - 1);
        map.tau_grid[step] = tau;
        const PropagatorMatrix g = spectrum ? numeric_propagator(*spectrum, tau)
                                            : analytic_propagator(params, tau);
        Eigen::VectorXd row;
        switch (config.input_kind) {
            case InputKind::Coherent:
                row = intensity_coherent(g, profile);
                break;
            case InputKind::Incoherent:
                row = intensity_incoherent(g, occupations);
                break;
            case InputKind::Fock:
            case InputKind::WState:
                row = intensity_wstate(g, profile);
                break;
        }
        map.values.row(step) = row.transpose();
    }

    switch (config.input_kind) {
        case InputKind::Fock: map.input_descriptor = "fock "; break;
        case InputKind::Coherent: map.input_descriptor = "coherent "; break;
        case InputKind::WState: map.input_descriptor = "wstate "; break;
        case InputKind::Incoherent: map.input_descriptor = "incoherent "; break;
    }
    map.input_descriptor += config.profile_spec;

    if (config.csv_path) emit_csv(map, *config.csv_path);
    if (config.svg_path) emit_svg_heatmap(map, *config.svg_path);
    return map;
}

void emit_csv(const IntensityMap& map, const std::string& path) {
    std::string body = "tau,site,intensity\n";
    for (Eigen::Index step = 0; step < map.values.rows(); ++step) {
        const std::string tau = format_number(map.tau_grid[step]);
        for (Eigen::Index site = 0; site < map.values.cols(); ++site) {
            body += tau;
            body += ',';
            body += std::to_string(map.params.site_origin + site);
            body += ',';
            body += format_number(map.values(step, site));
            body += '\n';
        }
    }
    auto file = open_output(path);
    file << body;
    if (!file) throw IoError("write failed for '" + path + "'");
}

void emit_svg_heatmap(const IntensityMap& map, const std::string& path) {
    const Eigen::Index rows = map.values.cols();  // sites
    const Eigen::Index cols = map.values.rows();  // time steps
    if (rows == 0 || cols == 0) throw std::invalid_argument("emit_svg_heatmap: empty map");

    const int cell_w = std::max<int>(1, static_cast<int>(1024 / cols));
    const int cell_h = std::max<int>(2, static_cast<int>(512 / rows));
    const int margin_left = 60;
    const int margin_bottom = 40;
    const int margin_top = 20;
    const int plot_w = cell_w * static_cast<int>(cols);
    const int plot_h = cell_h * static_cast<int>(rows);
    const int width = margin_left + plot_w + 20;
    const int height = margin_top + plot_h + margin_bottom;

    const double raw_max = map.values.maxCoeff();
    const double scale = raw_max > 0.0 ? raw_max : 1.0;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<desc>intensity heatmap: " + map.input_descriptor +
           "; normalization Imax=" + format_number(raw_max) + "</desc>\n";

    char color[8];
    for (Eigen::Index step = 0; step < cols; ++step) {
        for (Eigen::Index site = 0; site < rows; ++site) {
            const double v = map.values(step, site) / scale;
            const int level = static_cast<int>(std::lround(255.0 * std::clamp(v, 0.0, 1.0)));
            std::snprintf(color, sizeof(color), "#%02x%02x%02x", level, level, level);
            const int x = margin_left + static_cast<int>(step) * cell_w;
            // site index increases upward, like the intensity figures
            const int y = margin_top + static_cast<int>(rows - 1 - site) * cell_h;
            svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
                   std::to_string(cell_w) + "\" height=\"" + std::to_string(cell_h) + "\" fill=\"" +
                   color + "\"/>\n";
        }
    }

    svg += "<text x=\"" + std::to_string(margin_left + plot_w / 2) + "\" y=\"" +
           std::to_string(height - 10) + "\" text-anchor=\"middle\" font-size=\"14\">tau (0 to " +
           format_number(map.tau_grid[map.tau_grid.size() - 1]) + ")</text>\n";
    svg += "<text x=\"15\" y=\"" + std::to_string(margin_top + plot_h / 2) +
           "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 15 " +
           std::to_string(margin_top + plot_h / 2) + ")\">site (" +
           std::to_string(map.params.site_origin) + " to " +
           std::to_string(map.params.site_origin + static_cast<int>(rows) - 1) + ")</text>\n";
    svg += "<text x=\"" + std::to_string(margin_left) + "\" y=\"14\" font-size=\"12\">Imax = " +
           format_number(raw_max) + "</text>\n";
    svg += "</svg>\n";

    auto file = open_output(path);
    file << svg;
    if (!file) throw IoError("write failed for '" + path + "'");
}

}  // namespace wbloch
