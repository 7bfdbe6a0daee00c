// Parameter-landscape sweeps: evaluate one observable over a rectangular
// 2-parameter grid, serialize to CSV (lossless 17-significant-digit format),
// and persist a run record with a checksum of the data file.
//
// CSV layout: `# key=value` header lines (observable, axes, every fixed
// parameter), one `axis1,axis2,value` column-name line, then one row per
// cell, axis1-major. Cells whose evaluation raised a domain error hold nan.
#pragma once

#include <array>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "janus/core.hpp"
#include "janus/tmjs.hpp"
#include "janus/wigner.hpp"

namespace janus {

enum class Observable { g_single, g_cross, mean_photon, wigner_min };

inline const char* observable_name(Observable o) {
    switch (o) {
        case Observable::g_single: return "g_single";
        case Observable::g_cross: return "g_cross";
        case Observable::mean_photon: return "mean_photon";
        case Observable::wigner_min: return "wigner_min";
    }
    return "unknown";
}

inline std::optional<Observable> observable_from_name(const std::string& s) {
    if (s == "g_single") return Observable::g_single;
    if (s == "g_cross") return Observable::g_cross;
    if (s == "mean_photon") return Observable::mean_photon;
    if (s == "wigner_min") return Observable::wigner_min;
    return std::nullopt;
}

struct AxisSpec {
    std::string name;
    double min = 0.0;
    double max = 1.0;
    int count = 2;
};

inline const std::vector<std::string>& sweep_parameter_names() {
    static const std::vector<std::string> names = {"r", "s", "theta", "phi",
                                                   "delta", "chi", "eta", "k"};
    return names;
}

struct SweepSpec {
    AxisSpec axis1;
    AxisSpec axis2;
    std::map<std::string, double> fixed;
    Observable observable = Observable::g_single;
    int k = 2;
    bool log10_output = false;
    double clamp_floor = 1e-300;
    // grid used per cell when the observable is wigner_min
    double wigner_extent = 4.5;
    int wigner_points = 81;

    void validate() const {
        auto known = [](const std::string& n) {
            for (const auto& p : sweep_parameter_names())
                if (p == n) return true;
            return false;
        };
        for (const AxisSpec* a : {&axis1, &axis2}) {
            if (a->count < 2) throw std::invalid_argument("SweepSpec: axis counts must be >= 2");
            if (!known(a->name))
                throw std::invalid_argument("SweepSpec: unknown axis parameter '" + a->name + "'");
            if (!(a->min <= a->max) || !std::isfinite(a->min) || !std::isfinite(a->max))
                throw std::invalid_argument("SweepSpec: axis range must be finite with min <= max");
        }
        if (axis1.name == axis2.name)
            throw std::invalid_argument("SweepSpec: the two axes must differ");
        for (const auto& [name, value] : fixed) {
            if (!known(name))
                throw std::invalid_argument("SweepSpec: unknown fixed parameter '" + name + "'");
            if (!std::isfinite(value))
                throw std::invalid_argument("SweepSpec: fixed parameter must be finite");
        }
        if (!(clamp_floor > 0.0))
            throw std::invalid_argument("SweepSpec: clamp floor must be > 0");
    }
};

struct SweepGrid {
    std::string axis1_name;
    std::string axis2_name;
    std::vector<double> axis1_values;
    std::vector<double> axis2_values;
    std::vector<double> values;  // [i1 * axis2_values.size() + i2]
    std::map<std::string, std::string> header;  // key=value lines as written
    long error_cells = 0;

    double at(int i1, int i2) const {
        return values[static_cast<size_t>(i1) * axis2_values.size() + static_cast<size_t>(i2)];
    }
    long total_cells() const { return static_cast<long>(values.size()); }
};

struct RunRecord {
    std::string timestamp;
    std::string library_version;
    std::vector<std::string> output_paths;
    std::string checksum;  // fnv1a-64 of the CSV, hex
    long error_cells = 0;
    long total_cells = 0;
};

namespace detail {

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Cell parameters: defaults, overridden by fixed, overridden by axis values.
struct CellParams {
    double r = 0.5, s = 0.5, theta = 0.0, phi = 0.0, delta = 0.0;
    double chi = 0.70710678118654752, eta = 0.70710678118654752;
    int k = 2;

    void set(const std::string& name, double v) {
        if (name == "r") r = v;
        else if (name == "s") s = v;
        else if (name == "theta") theta = v;
        else if (name == "phi") phi = v;
        else if (name == "delta") delta = v;
        else if (name == "chi") chi = v;
        else if (name == "eta") eta = v;
        else if (name == "k") k = static_cast<int>(std::lround(v));
        else throw std::invalid_argument("unknown sweep parameter '" + name + "'");
    }
};

inline double evaluate_cell(const SweepSpec& spec, const CellParams& c) {
    if (spec.observable == Observable::wigner_min) {
        SingleModeJanus s{SqueezeParam(c.r, c.theta), SqueezeParam(c.s, c.phi), c.chi, c.eta,
                          c.delta};
        return wigner_grid(s, spec.wigner_extent, spec.wigner_points).min_value;
    }
    JanusConfig cfg{SqueezeParam(c.r, c.theta), SqueezeParam(c.s, c.phi), c.chi, c.eta, c.delta};
    switch (spec.observable) {
        case Observable::g_single: return g_single_tmjs(cfg, c.k);
        case Observable::g_cross: return g_cross_tmjs(cfg, c.k);
        case Observable::mean_photon: return mean_photon_tmjs(cfg);
        default: break;
    }
    throw std::invalid_argument("evaluate_cell: unknown observable");
}

inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace detail

// Evaluate the grid. Cells raising domain errors (degenerate superposition,
// mean-photon underflow, divergent input, invalid argument) become nan; the
// whole run fails if more than half the cells error out. Evaluation order is
// irrelevant, so rows may be split across threads.
inline SweepGrid run_sweep_grid(const SweepSpec& spec, int threads = 1) {
    spec.validate();
    if (threads < 1) threads = 1;

    SweepGrid grid;
    grid.axis1_name = spec.axis1.name;
    grid.axis2_name = spec.axis2.name;

    auto axis_values = [&](const AxisSpec& a) {
        std::vector<double> v(static_cast<size_t>(a.count));
        for (int i = 0; i < a.count; ++i)
            v[static_cast<size_t>(i)] = a.min + (a.max - a.min) * static_cast<double>(i) / (a.count - 1);
        // coherences diverge at r = 0; keep divergent-axis values strictly positive
        bool diverging = spec.observable == Observable::g_single ||
                         spec.observable == Observable::g_cross;
        if (diverging && (a.name == "r" || a.name == "s"))
            for (double& x : v) x = std::max(x, 1e-4);
        return v;
    };
    grid.axis1_values = axis_values(spec.axis1);
    grid.axis2_values = axis_values(spec.axis2);

    const size_t n1 = grid.axis1_values.size();
    const size_t n2 = grid.axis2_values.size();
    grid.values.assign(n1 * n2, 0.0);

    detail::CellParams base;
    for (const auto& [name, value] : spec.fixed) base.set(name, value);
    base.k = spec.fixed.count("k") ? base.k : spec.k;

    std::atomic<long> errors{0};
    auto worker = [&](size_t i1_begin, size_t i1_end) {
        for (size_t i1 = i1_begin; i1 < i1_end; ++i1) {
            for (size_t i2 = 0; i2 < n2; ++i2) {
                detail::CellParams c = base;
                c.set(spec.axis1.name, grid.axis1_values[i1]);
                c.set(spec.axis2.name, grid.axis2_values[i2]);
                double v;
                try {
                    v = detail::evaluate_cell(spec, c);
                    if (spec.log10_output) v = std::log10(std::max(v, spec.clamp_floor));
                } catch (const error&) {
                    v = std::nan("");
                    errors.fetch_add(1, std::memory_order_relaxed);
                } catch (const std::invalid_argument&) {
                    v = std::nan("");
                    errors.fetch_add(1, std::memory_order_relaxed);
                } catch (const std::domain_error&) {
                    v = std::nan("");
                    errors.fetch_add(1, std::memory_order_relaxed);
                }
                grid.values[i1 * n2 + i2] = v;
            }
        }
    };

    if (threads == 1) {
        worker(0, n1);
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (n1 + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            size_t b = static_cast<size_t>(t) * chunk;
            size_t e = std::min(n1, b + chunk);
            if (b >= e) break;
            pool.emplace_back(worker, b, e);
        }
        for (auto& th : pool) th.join();
    }

    grid.error_cells = errors.load();
    if (2 * grid.error_cells > grid.total_cells())
        throw sweep_failure("run_sweep: more than half of the cells failed (" +
                            std::to_string(grid.error_cells) + "/" +
                            std::to_string(grid.total_cells()) + ")");

    grid.header["observable"] = observable_name(spec.observable);
    grid.header["k"] = std::to_string(base.k);
    grid.header["log10"] = spec.log10_output ? "1" : "0";
    grid.header["clamp_floor"] = detail::format_g17(spec.clamp_floor);
    auto axis_meta = [](const AxisSpec& a) {
        return a.name + ":" + detail::format_g17(a.min) + ":" + detail::format_g17(a.max) + ":" +
               std::to_string(a.count);
    };
    grid.header["axis1"] = axis_meta(spec.axis1);
    grid.header["axis2"] = axis_meta(spec.axis2);
    for (const auto& [name, value] : spec.fixed)
        grid.header["fixed." + name] = detail::format_g17(value);
    return grid;
}

inline std::string sweep_csv_string(const SweepGrid& grid) {
    std::string out;
    for (const auto& [key, value] : grid.header) out += "# " + key + "=" + value + "\n";
    out += grid.axis1_name + "," + grid.axis2_name + ",value\n";
    const size_t n2 = grid.axis2_values.size();
    for (size_t i1 = 0; i1 < grid.axis1_values.size(); ++i1)
        for (size_t i2 = 0; i2 < n2; ++i2) {
            out += detail::format_g17(grid.axis1_values[i1]);
            out += ',';
            out += detail::format_g17(grid.axis2_values[i2]);
            out += ',';
            out += detail::format_g17(grid.values[i1 * n2 + i2]);
            out += '\n';
        }
    return out;
}

inline void write_text_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw error("cannot open '" + path + "' for writing");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw error("short write to '" + path + "'");
}

inline void write_sweep_csv(const SweepGrid& grid, const std::string& path) {
    write_text_file(path, sweep_csv_string(grid));
}

inline SweepGrid read_sweep_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw error("cannot open '" + path + "' for reading");
    SweepGrid grid;
    std::string line;
    bool have_columns = false;
    std::vector<std::array<double, 3>> rows;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            size_t start = line.find_first_not_of(" \t", 1);
            size_t eq = line.find('=', start);
            if (start != std::string::npos && eq != std::string::npos)
                grid.header[line.substr(start, eq - start)] = line.substr(eq + 1);
            continue;
        }
        if (!have_columns) {
            std::istringstream ss(line);
            std::string a, b, c;
            std::getline(ss, a, ',');
            std::getline(ss, b, ',');
            std::getline(ss, c, ',');
            grid.axis1_name = a;
            grid.axis2_name = b;
            have_columns = true;
            continue;
        }
        std::array<double, 3> row{};
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &row[0], &row[1], &row[2]) != 3) {
            // nan cells print as "nan"; parse columns individually
            std::istringstream ss(line);
            std::string tok;
            for (int j = 0; j < 3 && std::getline(ss, tok, ','); ++j)
                row[static_cast<size_t>(j)] = std::strtod(tok.c_str(), nullptr);
        }
        rows.push_back(row);
    }
    auto c2it = grid.header.find("axis2");
    if (c2it == grid.header.end()) throw error("read_sweep_csv: missing axis2 header");
    size_t colon = c2it->second.rfind(':');
    size_t n2 = static_cast<size_t>(std::stol(c2it->second.substr(colon + 1)));
    if (n2 == 0 || rows.size() % n2 != 0) throw error("read_sweep_csv: inconsistent row count");
    size_t n1 = rows.size() / n2;
    grid.axis1_values.resize(n1);
    grid.axis2_values.resize(n2);
    grid.values.resize(rows.size());
    for (size_t i1 = 0; i1 < n1; ++i1) grid.axis1_values[i1] = rows[i1 * n2][0];
    for (size_t i2 = 0; i2 < n2; ++i2) grid.axis2_values[i2] = rows[i2][1];
    for (size_t i = 0; i < rows.size(); ++i) {
        grid.values[i] = rows[i][2];
        if (std::isnan(rows[i][2])) ++grid.error_cells;
    }
    return grid;
}

inline std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw error("cannot open '" + path + "' for checksumming");
    std::ostringstream ss;
    ss << f.rdbuf();
    return detail::fnv1a(ss.str());
}

struct SweepOutputs {
    std::string csv_path;
    std::string ppm_path;     // empty: no heatmap
    std::string record_path;  // empty: csv_path + ".json"
};

namespace detail {

inline nlohmann::json spec_to_json(const SweepSpec& spec) {
    auto axis = [](const AxisSpec& a) {
        return nlohmann::json{{"name", a.name}, {"min", a.min}, {"max", a.max}, {"count", a.count}};
    };
    nlohmann::json j{{"axis1", axis(spec.axis1)},
                     {"axis2", axis(spec.axis2)},
                     {"observable", observable_name(spec.observable)},
                     {"k", spec.k},
                     {"log10", spec.log10_output},
                     {"clamp_floor", spec.clamp_floor}};
    nlohmann::json fixed = nlohmann::json::object();
    for (const auto& [name, value] : spec.fixed) fixed[name] = value;
    j["fixed"] = fixed;
    if (spec.observable == Observable::wigner_min) {
        j["wigner_extent"] = spec.wigner_extent;
        j["wigner_points"] = spec.wigner_points;
    }
    return j;
}

}  // namespace detail

// Evaluate, write the CSV (and optional heatmap done by the caller via
// render_heatmap), then persist the run record atomically (temp + rename).
inline std::pair<SweepGrid, RunRecord> run_sweep(const SweepSpec& spec, const SweepOutputs& out,
                                                 int threads = 1) {
    SweepGrid grid = run_sweep_grid(spec, threads);
    write_sweep_csv(grid, out.csv_path);

    RunRecord rec;
    rec.timestamp = detail::utc_timestamp();
    rec.library_version = version_string;
    rec.output_paths.push_back(out.csv_path);
    if (!out.ppm_path.empty()) rec.output_paths.push_back(out.ppm_path);
    char hex[24];
    std::snprintf(hex, sizeof(hex), "%016" PRIx64, fnv1a_file(out.csv_path));
    rec.checksum = hex;
    rec.error_cells = grid.error_cells;
    rec.total_cells = grid.total_cells();

    nlohmann::json j{{"spec", detail::spec_to_json(spec)},
                     {"timestamp", rec.timestamp},
                     {"library_version", rec.library_version},
                     {"output_paths", rec.output_paths},
                     {"checksum_fnv1a64", rec.checksum},
                     {"error_cells", rec.error_cells},
                     {"total_cells", rec.total_cells}};
    std::string record_path = out.record_path.empty() ? out.csv_path + ".json" : out.record_path;
    std::string tmp = record_path + ".tmp";
    write_text_file(tmp, j.dump(2) + "\n");
    if (std::rename(tmp.c_str(), record_path.c_str()) != 0)
        throw error("run_sweep: cannot rename run record into place");
    return {std::move(grid), std::move(rec)};
}

}  // namespace janus
