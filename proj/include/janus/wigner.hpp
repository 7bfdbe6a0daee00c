// Phase-space picture of the single-mode Janus analogue: a superposition of
// two single-mode squeezed vacua, supported on even Fock states only.
//
// Squeezed-vacuum expansion (convention fixed by agreement with the matrix
// exponential of the generator (xi a^dag^2 - xi^* a^2)/2 applied to |0>):
//   d_{2m}(r,theta) = (e^{i theta} tanh r)^m sqrt((2m)!)/(2^m m!) / sqrt(cosh r)
//
// Wigner function on quadratures with [a,a^dag] = 1, x = (a+a^dag)/sqrt(2),
// normalized so that integral W dx dp = 1 (vacuum peak 1/pi). Fock-basis
// kernel, for m >= n and alpha = (x+ip)/sqrt(2), u = x^2+p^2:
//   W_{|n><m|}(x,p) = (1/pi)(-1)^n sqrt(n!/m!) (2 alpha)^{m-n} e^{-u} L_n^{m-n}(2u)
// accumulated band by band (d = m-n) with the combined factor
// T(n,d) = prod_{j=n+1}^{n+d} (2 alpha)/sqrt(j) updated incrementally so no
// intermediate overflows or underflows.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "janus/core.hpp"

namespace janus {

struct SingleModeJanus {
    SqueezeParam xi;
    SqueezeParam zeta;
    double chi = 1.0;
    double eta = 0.0;
    double delta = 0.0;

    void validate() const {
        if (!std::isfinite(chi) || !std::isfinite(eta) || chi < 0.0 || eta < 0.0)
            throw invalid_config("SingleModeJanus: weights must be finite and >= 0");
        if (chi == 0.0 && eta == 0.0)
            throw invalid_config("SingleModeJanus: chi and eta must not both be zero");
        if (!std::isfinite(delta))
            throw invalid_config("SingleModeJanus: delta must be finite");
    }
};

// Even cutoff with both branch tails |d_cutoff|^2 below the tail tolerance.
inline int adaptive_cutoff(const SingleModeJanus& s, double tau = tail_tolerance) {
    double x = std::max(s.xi.x(), s.zeta.x());
    if (x <= 0.0) return 8;
    int m = static_cast<int>(std::ceil(std::log(tau) / std::log(x))) + 1;
    return 2 * std::clamp(m, 4, max_cutoff / 2);
}

// c_{2m} = chi d_{2m}(xi) + eta e^{i delta} d_{2m}(zeta); odd entries exactly 0.
// Not renormalized. When cutoff_adequate is supplied it reports whether each
// branch tail individually met the tolerance (the combined entry can be small
// through cancellation alone).
inline std::vector<cxd> janus_fock_coefficients(const SingleModeJanus& s, int cutoff,
                                                double tau = tail_tolerance,
                                                bool* cutoff_adequate = nullptr) {
    s.validate();
    if (cutoff < 0 || cutoff % 2 != 0)
        throw std::invalid_argument("janus_fock_coefficients: cutoff must be even and >= 0");
    std::vector<cxd> c(static_cast<size_t>(cutoff) + 1, cxd{0.0, 0.0});

    bool adequate = true;
    auto accumulate = [&](const SqueezeParam& p, cxd weight) {
        const cxd a = p.alpha();
        cxd term = weight / std::sqrt(std::cosh(p.r()));
        c[0] += term;
        for (int m = 1; 2 * m <= cutoff; ++m) {
            // d_{2m}/d_{2m-2} = alpha sqrt(2m (2m-1)) / (2m)
            term *= a * std::sqrt(static_cast<double>(2 * m) * (2.0 * m - 1.0)) /
                    static_cast<double>(2 * m);
            c[static_cast<size_t>(2 * m)] += term;
        }
        if (std::norm(term) > tau * std::norm(weight)) adequate = false;
    };
    accumulate(s.xi, s.chi);
    accumulate(s.zeta, s.eta * std::polar(1.0, s.delta));

    if (cutoff_adequate != nullptr) *cutoff_adequate = adequate;
    return c;
}

namespace detail {

// band_used[d]: some pair (n, n+d) has both coefficients nonzero. Point
// independent, so grids compute it once.
inline std::vector<char> wigner_band_occupancy(std::span<const cxd> coeffs) {
    const size_t np = coeffs.size();
    std::vector<char> occupied(np, 0);
    for (size_t n = 0; n < np; ++n) occupied[n] = coeffs[n] != cxd{0.0, 0.0};
    std::vector<char> band(np, 0);
    for (size_t d = 0; d < np; ++d)
        for (size_t n = 0; n + d < np; ++n)
            if (occupied[n] && occupied[n + d]) {
                band[d] = 1;
                break;
            }
    return band;
}

inline double wigner_point_impl(std::span<const cxd> coeffs, std::span<const char> band_used,
                                double x, double p) {
    const size_t np = coeffs.size();
    const double u = x * x + p * p;
    const cxd two_alpha = std::sqrt(2.0) * cxd{x, p};
    double total = 0.0;

    for (size_t d = 0; d < np; ++d) {
        if (!band_used[d]) continue;

        cxd t = 1.0;  // T(0,d) = (2 alpha)^d / sqrt(d!)
        for (size_t j = 1; j <= d; ++j) t *= two_alpha / std::sqrt(static_cast<double>(j));

        double lag_prev = 0.0;  // L_{n-1}^{(d)}(2u)
        double lag = 1.0;       // L_n^{(d)}(2u)
        double sign = 1.0;
        cxd acc = 0.0;
        for (size_t n = 0; n + d < np; ++n) {
            if (n > 0) {
                const double nn = static_cast<double>(n);
                const double dd = static_cast<double>(d);
                double lag_next =
                    ((2.0 * (nn - 1.0) + 1.0 + dd - 2.0 * u) * lag - (nn - 1.0 + dd) * lag_prev) / nn;
                lag_prev = lag;
                lag = lag_next;
                t *= std::sqrt(nn / (nn + dd));
                sign = -sign;
            }
            const cxd pair = coeffs[n] * std::conj(coeffs[n + d]);
            if (pair != cxd{0.0, 0.0}) acc += pair * (sign * t * lag);
        }
        total += (d == 0) ? acc.real() : 2.0 * acc.real();
    }
    return total * std::exp(-u) / std::numbers::pi;
}

}  // namespace detail

// W(x,p) for normalized Fock coefficients.
inline double wigner_point(std::span<const cxd> coeffs, double x, double p) {
    auto band = detail::wigner_band_occupancy(coeffs);
    return detail::wigner_point_impl(coeffs, band, x, p);
}

// Rectangular Wigner grid over [-extent, extent]^2 with derived negativity
// measures. values is row-major over the x axis: values[ix * points + ip].
struct WignerGrid {
    std::vector<double> x_axis;
    std::vector<double> p_axis;
    std::vector<double> values;
    double min_value = 0.0;
    double negative_area = 0.0;  // sum |W| over W<0 cells times cell area
    bool cutoff_adequate = true;

    double at(int ix, int ip) const {
        return values[static_cast<size_t>(ix) * p_axis.size() + static_cast<size_t>(ip)];
    }
    double cell_area() const { return (x_axis[1] - x_axis[0]) * (p_axis[1] - p_axis[0]); }
    double integral() const {
        double s = 0.0;
        for (double w : values) s += w;
        return s * cell_area();
    }
};

// W on a points x points grid (points odd so the origin is a node). The state
// is normalized internally; a cancelled superposition is rejected.
inline WignerGrid wigner_grid(const SingleModeJanus& s, double extent, int points,
                              int cutoff = -1) {
    if (!(extent > 0.0)) throw std::invalid_argument("wigner_grid: extent must be > 0");
    if (points < 3 || points % 2 == 0)
        throw std::invalid_argument("wigner_grid: points must be odd and >= 3");
    if (cutoff < 0) cutoff = adaptive_cutoff(s);

    bool adequate = true;
    std::vector<cxd> c = janus_fock_coefficients(s, cutoff, tail_tolerance, &adequate);
    double n2 = 0.0;
    for (const auto& a : c) n2 += std::norm(a);
    if (n2 <= norm_epsilon)
        throw degenerate_superposition("wigner_grid: superposed components cancel");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : c) a *= inv;
    auto band = detail::wigner_band_occupancy(c);

    WignerGrid g;
    g.cutoff_adequate = adequate;
    g.x_axis.resize(static_cast<size_t>(points));
    g.p_axis.resize(static_cast<size_t>(points));
    const double step = 2.0 * extent / (points - 1);
    for (int i = 0; i < points; ++i) {
        g.x_axis[static_cast<size_t>(i)] = -extent + step * i;
        g.p_axis[static_cast<size_t>(i)] = -extent + step * i;
    }
    g.values.resize(static_cast<size_t>(points) * points);

    double min_w = std::numeric_limits<double>::infinity();
    double neg = 0.0;
    for (int ix = 0; ix < points; ++ix) {
        for (int ip = 0; ip < points; ++ip) {
            double w = detail::wigner_point_impl(c, band, g.x_axis[static_cast<size_t>(ix)],
                                                 g.p_axis[static_cast<size_t>(ip)]);
            g.values[static_cast<size_t>(ix) * points + ip] = w;
            min_w = std::min(min_w, w);
            if (w < 0.0) neg += -w;
        }
    }
    g.min_value = min_w;
    g.negative_area = neg * step * step;
    return g;
}

// pi W(0,0) - sum (-1)^n |c_n|^2 / sum |c_n|^2. The Janus states live on even
// Fock states, so the subtracted term is exactly 1 and the result should
// vanish to within the kernel evaluation error.
inline double parity_check(const SingleModeJanus& s, int cutoff = -1) {
    if (cutoff < 0) cutoff = adaptive_cutoff(s);
    std::vector<cxd> c = janus_fock_coefficients(s, cutoff);
    double n2 = 0.0;
    double parity = 0.0;
    double sign = 1.0;
    for (const auto& a : c) {
        n2 += std::norm(a);
        parity += sign * std::norm(a);
        sign = -sign;
    }
    if (n2 <= norm_epsilon)
        throw degenerate_superposition("parity_check: superposed components cancel");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : c) a *= inv;
    return std::numbers::pi * wigner_point(c, 0.0, 0.0) - parity / n2;
}

}  // namespace janus
