// Binary PPM (P6) heatmaps with a linear grayscale map over [min, max].
// Data levels use bytes 1..255 so that nan cells, rendered pure black, stay
// distinguishable from the minimum.
#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "janus/core.hpp"
#include "janus/sweep.hpp"
#include "janus/wigner.hpp"

namespace janus {

// values laid out row-major: values[row * width + col]. Rows are written top
// to bottom as given.
inline void render_heatmap_raw(const std::vector<double>& values, int width, int height,
                               const std::string& path) {
    if (width < 1 || height < 1 || values.size() != static_cast<size_t>(width) * height)
        throw std::invalid_argument("render_heatmap: size mismatch");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : values)
        if (!std::isnan(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw error("render_heatmap: no finite cells to render");

    std::string bytes = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    bytes.reserve(bytes.size() + static_cast<size_t>(3) * width * height);
    const double span = hi - lo;
    for (double v : values) {
        unsigned char g = 0;
        if (!std::isnan(v)) {
            double t = span > 0.0 ? (v - lo) / span : 0.0;
            g = static_cast<unsigned char>(1 + std::lround(t * 254.0));
        }
        bytes.push_back(static_cast<char>(g));
        bytes.push_back(static_cast<char>(g));
        bytes.push_back(static_cast<char>(g));
    }
    write_text_file(path, bytes);
}

// Sweep grid: axis2 maps to image rows (top row = last axis2 value, so the
// image reads like a plot with axis2 increasing upward), axis1 to columns.
inline void render_heatmap(const SweepGrid& grid, const std::string& path) {
    const int w = static_cast<int>(grid.axis1_values.size());
    const int h = static_cast<int>(grid.axis2_values.size());
    std::vector<double> img(static_cast<size_t>(w) * h);
    for (int row = 0; row < h; ++row) {
        int i2 = h - 1 - row;
        for (int col = 0; col < w; ++col)
            img[static_cast<size_t>(row) * w + col] = grid.at(col, i2);
    }
    render_heatmap_raw(img, w, h, path);
}

inline void render_heatmap(const WignerGrid& grid, const std::string& path) {
    const int w = static_cast<int>(grid.x_axis.size());
    const int h = static_cast<int>(grid.p_axis.size());
    std::vector<double> img(static_cast<size_t>(w) * h);
    for (int row = 0; row < h; ++row) {
        int ip = h - 1 - row;
        for (int col = 0; col < w; ++col)
            img[static_cast<size_t>(row) * w + col] = grid.at(col, ip);
    }
    render_heatmap_raw(img, w, h, path);
}

}  // namespace janus
