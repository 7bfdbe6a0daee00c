// Command-line front end: single-point coherence evaluation (JSON), parameter
// landscape sweeps (CSV + PPM heatmaps + run record), Wigner grids, Bogoliubov
// Ramsey sequences, Schwarzian flux of sampled worldlines, and the
// cross-module verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "janus/janus.hpp"

namespace {

using nlohmann::json;

struct StateParams {
    double r = 0.5;
    double s = 0.5;
    double theta = 0.0;
    double phi = 0.0;
    double delta = 0.0;
    double chi = 0.70710678118654752;
    double eta = 0.70710678118654752;
};

void add_state_options(CLI::App* cmd, StateParams& p) {
    cmd->add_option("--r", p.r, "squeeze magnitude of the first branch")->capture_default_str();
    cmd->add_option("--s", p.s, "squeeze magnitude of the second branch")->capture_default_str();
    cmd->add_option("--theta", p.theta, "squeeze phase of the first branch (rad)")
        ->capture_default_str();
    cmd->add_option("--phi", p.phi, "squeeze phase of the second branch (rad)")
        ->capture_default_str();
    cmd->add_option("--delta", p.delta, "superposition phase (rad)")->capture_default_str();
    cmd->add_option("--chi", p.chi, "weight of the first branch")->capture_default_str();
    cmd->add_option("--eta", p.eta, "weight of the second branch")->capture_default_str();
}

janus::JanusConfig to_config(const StateParams& p) {
    return {janus::SqueezeParam(p.r, p.theta), janus::SqueezeParam(p.s, p.phi), p.chi, p.eta,
            p.delta};
}

json parameters_json(const StateParams& p) {
    return json{{"r", p.r},         {"s", p.s},     {"theta", p.theta}, {"phi", p.phi},
                {"delta", p.delta}, {"chi", p.chi}, {"eta", p.eta}};
}

std::string resolve_path(const std::string& out_dir, const std::string& name) {
    if (name.empty() || name.front() == '/' || out_dir.empty() || out_dir == ".") return name;
    return out_dir + "/" + name;
}

janus::AxisSpec parse_axis(const std::string& text) {
    janus::AxisSpec axis;
    std::istringstream ss(text);
    std::string tok;
    std::vector<std::string> parts;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() != 4)
        throw CLI::ValidationError("axis", "expected name:min:max:count, got '" + text + "'");
    axis.name = parts[0];
    axis.min = std::strtod(parts[1].c_str(), nullptr);
    axis.max = std::strtod(parts[2].c_str(), nullptr);
    axis.count = std::atoi(parts[3].c_str());
    return axis;
}

int cmd_coherence(const StateParams& p, const std::string& observable, int k, bool unnormalized,
                  bool oracle, int cutoff) {
    janus::JanusConfig cfg = to_config(p);
    const auto norm = unnormalized ? janus::Normalization::unnormalized
                                   : janus::Normalization::normalized;

    double value = 0.0;
    janus::InterferenceKernel kern;
    if (observable == "mean_photon") {
        kern = janus::kernel_single(cfg, 1);
        value = janus::mean_photon_tmjs(cfg);
    } else if (observable == "g_single") {
        kern = janus::kernel_single(cfg, k);
        value = janus::g_single_tmjs(cfg, k, norm);
    } else if (observable == "g_cross") {
        kern = janus::kernel_cross(cfg, k);
        value = janus::g_cross_tmjs(cfg, k, norm);
    } else {
        throw CLI::ValidationError("observable", "unknown observable '" + observable + "'");
    }

    std::string provenance = "closed-form";
    if (oracle) {
        if (cutoff < 0) cutoff = std::max(janus::adaptive_cutoff(cfg), 160);
        auto v = janus::build_tmjs_vector(cfg, cutoff);
        double mean = janus::factorial_moment_single(v, 1);
        if (observable == "mean_photon")
            value = mean;
        else if (observable == "g_single")
            value = janus::factorial_moment_single(v, k) / std::pow(mean, k);
        else
            value = janus::factorial_moment_cross(v, k) / std::pow(mean, 2 * k);
        provenance = "oracle";
    }

    json out{{"parameters", parameters_json(p)},
             {"observable", observable},
             {"k", observable == "mean_photon" ? 1 : k},
             {"value", value},
             {"kernel", json{{"magnitude", kern.magnitude}, {"phase", kern.phase}}},
             {"provenance", provenance}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

janus::SweepGrid wigner_to_grid(const janus::WignerGrid& w, const StateParams& p, int points,
                                double extent) {
    janus::SweepGrid grid;
    grid.axis1_name = "x";
    grid.axis2_name = "p";
    grid.axis1_values = w.x_axis;
    grid.axis2_values = w.p_axis;
    grid.values = w.values;
    grid.header["observable"] = "wigner";
    grid.header["axis1"] = "x:" + std::to_string(-extent) + ":" + std::to_string(extent) + ":" +
                           std::to_string(points);
    grid.header["axis2"] = "p:" + std::to_string(-extent) + ":" + std::to_string(extent) + ":" +
                           std::to_string(points);
    for (const auto& [key, val] : parameters_json(p).items())
        grid.header["fixed." + key] = janus::detail::format_g17(val.get<double>());
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"photon statistics of two-mode squeezed-vacuum superpositions"};
    app.set_version_flag("--version", janus::version_string);
    app.set_config("--config", "", "read options from a config file");
    app.require_subcommand(1);

    std::string out_dir = ".";
    app.add_option("--out-dir", out_dir, "directory for output files")
        ->envname("JANUS_OUT_DIR")
        ->capture_default_str();

    // coherence
    StateParams cp;
    std::string c_observable = "g_cross";
    int c_k = 2;
    bool c_unnormalized = false;
    bool c_oracle = false;
    int c_cutoff = -1;
    auto* coherence = app.add_subcommand("coherence", "evaluate one observable, JSON to stdout");
    add_state_options(coherence, cp);
    coherence->add_option("-k,--k", c_k, "coherence order")->capture_default_str();
    coherence->add_option("--observable", c_observable, "g_single | g_cross | mean_photon")
        ->capture_default_str();
    coherence->add_flag("--unnormalized", c_unnormalized,
                        "skip the division by the superposition norm");
    coherence->add_flag("--oracle", c_oracle, "evaluate via the truncated Fock oracle instead");
    coherence->add_option("--cutoff", c_cutoff, "oracle truncation (default: adaptive)");

    // sweep
    StateParams sp;
    std::string s_axis1 = "r:0.05:1.5:201";
    std::string s_axis2 = "delta:0:6.283185307179586:201";
    std::string s_observable = "g_cross";
    int s_k = 2;
    bool s_log10 = false;
    double s_clamp = 1e-300;
    std::string s_csv = "sweep.csv";
    std::string s_ppm;
    std::string s_record;
    int s_threads = 1;
    double s_wextent = 4.5;
    int s_wpoints = 81;
    std::vector<std::string> s_fixed;
    auto* sweep = app.add_subcommand("sweep", "evaluate an observable over a 2-parameter grid");
    sweep->add_option("--axis1", s_axis1, "first axis as name:min:max:count")
        ->capture_default_str();
    sweep->add_option("--axis2", s_axis2, "second axis as name:min:max:count")
        ->capture_default_str();
    sweep->add_option("--fix", s_fixed, "fixed parameter as name=value (repeatable)");
    sweep->add_option("--observable", s_observable,
                      "g_single | g_cross | mean_photon | wigner_min")
        ->capture_default_str();
    sweep->add_option("-k,--k", s_k, "coherence order")->capture_default_str();
    sweep->add_flag("--log10", s_log10, "store log10 of the (clamped) observable");
    sweep->add_option("--clamp-floor", s_clamp, "clamp before log10")->capture_default_str();
    sweep->add_option("--csv", s_csv, "output CSV file")->capture_default_str();
    sweep->add_option("--ppm", s_ppm, "also render a PPM heatmap to this file");
    sweep->add_option("--record", s_record, "run-record JSON path (default: csv + .json)");
    sweep->add_option("--threads", s_threads, "worker threads")->capture_default_str();
    sweep->add_option("--wigner-extent", s_wextent, "per-cell Wigner grid extent (wigner_min)")
        ->capture_default_str();
    sweep->add_option("--wigner-points", s_wpoints, "per-cell Wigner grid points (wigner_min)")
        ->capture_default_str();

    // wigner
    StateParams wp;
    double w_extent = 4.5;
    int w_points = 201;
    int w_cutoff = -1;
    std::string w_csv;
    std::string w_ppm;
    auto* wigner = app.add_subcommand("wigner", "phase-space grid of the single-mode analogue");
    add_state_options(wigner, wp);
    wigner->add_option("--extent", w_extent, "half-width of the quadrature grid")
        ->capture_default_str();
    wigner->add_option("--points", w_points, "grid points per axis (odd)")->capture_default_str();
    wigner->add_option("--cutoff", w_cutoff, "Fock cutoff (default: adaptive)");
    wigner->add_option("--csv", w_csv, "write the grid as CSV");
    wigner->add_option("--ppm", w_ppm, "render a PPM heatmap");

    // ramsey
    double r_r = 0.5;
    double r_phi = 1.5707963267948966;
    auto* ramsey = app.add_subcommand("ramsey", "squeeze-dwell-unsqueeze Bogoliubov map");
    ramsey->add_option("--r", r_r, "squeeze magnitude")->capture_default_str();
    ramsey->add_option("--phi", r_phi, "dwell phase (rad)")->capture_default_str();

    // schwarzian
    std::string t_file;
    double t_u = 0.0;
    double t_step = 1e-3;
    auto* schwarzian =
        app.add_subcommand("schwarzian", "radiated flux of a sampled mirror worldline");
    schwarzian->add_option("--traj", t_file, "CSV of u,p(u) samples")->required();
    schwarzian->add_option("--u", t_u, "evaluation point")->required();
    schwarzian->add_option("--step", t_step, "stencil step for callable worldlines")
        ->capture_default_str();

    // verify
    std::string v_level = "quick";
    std::uint64_t v_seed = 20250811;
    std::string v_json;
    auto* verify = app.add_subcommand("verify", "run the cross-validation suite");
    verify->add_option("--level", v_level, "quick | full")->capture_default_str();
    verify->add_option("--seed", v_seed, "random-config seed")->capture_default_str();
    verify->add_option("--json", v_json, "also dump the report as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (coherence->parsed())
            return cmd_coherence(cp, c_observable, c_k, c_unnormalized, c_oracle, c_cutoff);

        if (sweep->parsed()) {
            janus::SweepSpec spec;
            spec.axis1 = parse_axis(s_axis1);
            spec.axis2 = parse_axis(s_axis2);
            auto obs = janus::observable_from_name(s_observable);
            if (!obs) throw CLI::ValidationError("observable", "unknown observable");
            spec.observable = *obs;
            spec.k = s_k;
            spec.log10_output = s_log10;
            spec.clamp_floor = s_clamp;
            spec.wigner_extent = s_wextent;
            spec.wigner_points = s_wpoints;
            for (const auto& kv : s_fixed) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw CLI::ValidationError("fix", "expected name=value, got '" + kv + "'");
                spec.fixed[kv.substr(0, eq)] = std::strtod(kv.c_str() + eq + 1, nullptr);
            }
            janus::SweepOutputs out;
            out.csv_path = resolve_path(out_dir, s_csv);
            out.ppm_path = s_ppm.empty() ? "" : resolve_path(out_dir, s_ppm);
            out.record_path = s_record.empty() ? "" : resolve_path(out_dir, s_record);
            auto [grid, rec] = janus::run_sweep(spec, out, s_threads);
            if (!out.ppm_path.empty()) janus::render_heatmap(grid, out.ppm_path);
            json summary{{"csv", out.csv_path},
                         {"record", out.record_path.empty() ? out.csv_path + ".json"
                                                            : out.record_path},
                         {"checksum_fnv1a64", rec.checksum},
                         {"total_cells", rec.total_cells},
                         {"error_cells", rec.error_cells}};
            if (!out.ppm_path.empty()) summary["ppm"] = out.ppm_path;
            std::cout << summary.dump(2) << "\n";
            return 0;
        }

        if (wigner->parsed()) {
            janus::SingleModeJanus s{janus::SqueezeParam(wp.r, wp.theta),
                                     janus::SqueezeParam(wp.s, wp.phi), wp.chi, wp.eta, wp.delta};
            auto grid = janus::wigner_grid(s, w_extent, w_points, w_cutoff);
            json summary{{"parameters", parameters_json(wp)},
                         {"min_value", grid.min_value},
                         {"negative_area", grid.negative_area},
                         {"integral", grid.integral()},
                         {"parity_deviation", janus::parity_check(s)},
                         {"cutoff_adequate", grid.cutoff_adequate}};
            if (!w_csv.empty()) {
                std::string path = resolve_path(out_dir, w_csv);
                janus::write_sweep_csv(wigner_to_grid(grid, wp, w_points, w_extent), path);
                summary["csv"] = path;
            }
            if (!w_ppm.empty()) {
                std::string path = resolve_path(out_dir, w_ppm);
                janus::render_heatmap(grid, path);
                summary["ppm"] = path;
            }
            std::cout << summary.dump(2) << "\n";
            return 0;
        }

        if (ramsey->parsed()) {
            auto m = janus::ramsey_sequence(r_r, r_phi);
            auto sq = m.to_squeeze_param();
            json out{{"r", r_r},
                     {"phi", r_phi},
                     {"alpha", json{{"re", m.alpha.real()}, {"im", m.alpha.imag()}}},
                     {"beta", json{{"re", m.beta.real()}, {"im", m.beta.imag()}}},
                     {"su11_defect", m.su11_defect()},
                     {"squeeze", json{{"r", sq.r()}, {"theta", sq.theta()}}}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (schwarzian->parsed()) {
            std::ifstream f(t_file);
            if (!f) throw janus::error("cannot open trajectory file '" + t_file + "'");
            std::vector<double> us, vs;
            std::string line;
            while (std::getline(f, line)) {
                if (line.empty() || line[0] == '#') continue;
                double u, v;
                if (std::sscanf(line.c_str(), "%lf %*[,; \t] %lf", &u, &v) == 2 ||
                    std::sscanf(line.c_str(), "%lf,%lf", &u, &v) == 2 ||
                    std::sscanf(line.c_str(), "%lf %lf", &u, &v) == 2) {
                    us.push_back(u);
                    vs.push_back(v);
                }
            }
            auto traj = janus::MirrorTrajectory::from_samples(std::move(us), std::move(vs));
            double flux = janus::schwarzian_flux(traj, t_u, t_step);
            json out{{"u", t_u}, {"flux", flux}, {"samples", vs.size()}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (verify->parsed()) {
            janus::VerifyLevel level;
            if (v_level == "quick")
                level = janus::VerifyLevel::quick;
            else if (v_level == "full")
                level = janus::VerifyLevel::full;
            else
                throw CLI::ValidationError("level", "expected quick or full");
            janus::VerifyOptions opts;
            opts.seed = v_seed;
            auto rep = janus::verify_suite(level, opts);
            janus::print_report(rep, std::cout);
            if (!v_json.empty()) {
                json checks = json::array();
                for (const auto& c : rep.checks)
                    checks.push_back(json{{"name", c.name},
                                          {"deviation", c.deviation},
                                          {"threshold", c.threshold},
                                          {"passed", c.passed}});
                json out{{"level", v_level}, {"seed", v_seed}, {"checks", checks},
                         {"all_passed", rep.all_passed()}};
                janus::write_text_file(resolve_path(out_dir, v_json), out.dump(2) + "\n");
            }
            return rep.exit_status();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
