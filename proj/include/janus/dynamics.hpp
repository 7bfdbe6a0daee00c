// SU(1,1) dynamics machinery: disentangling verification through the
// Wei-Norman ODE system, squeeze-dwell-unsqueeze Bogoliubov sequences with a
// dialable phase, per-Schmidt-mode parameter mapping onto a Janus config, and
// the Schwarzian radiation flux of a moving reflector.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "janus/core.hpp"

namespace janus {

// 2x2 SU(1,1) map [[alpha, beta], [beta^*, alpha^*]] acting on the (a, b^dag)
// doublet; |alpha|^2 - |beta|^2 = 1.
struct BogoliubovMap2 {
    cxd alpha{1.0, 0.0};
    cxd beta{0.0, 0.0};

    double su11_defect() const { return std::norm(alpha) - std::norm(beta) - 1.0; }

    // Squeeze parameters of the TMSS this map generates from vacuum:
    // r = asinh |beta| and theta = arg beta (a convention; passive rotations
    // can shift theta, but only phase differences enter interference).
    SqueezeParam to_squeeze_param() const {
        double r = std::asinh(std::abs(beta));
        double theta = std::abs(beta) > 0.0 ? std::atan2(beta.imag(), beta.real()) : 0.0;
        return SqueezeParam(r, theta);
    }
};

// Matrix product; the SU(1,1) form is closed under composition.
inline BogoliubovMap2 operator*(const BogoliubovMap2& b, const BogoliubovMap2& a) {
    BogoliubovMap2 m;
    m.alpha = b.alpha * a.alpha + b.beta * std::conj(a.beta);
    m.beta = b.alpha * a.beta + b.beta * std::conj(a.alpha);
    return m;
}

// Sudden two-mode squeeze Q(r) = [[cosh r, sinh r], [sinh r, cosh r]].
inline BogoliubovMap2 squeeze_map(double r) {
    return {cxd{std::cosh(r), 0.0}, cxd{std::sinh(r), 0.0}};
}

// Free dwell R(phi) = diag(e^{-i phi}, e^{+i phi}).
inline BogoliubovMap2 rotation_map(double phi) {
    return {std::polar(1.0, -phi), cxd{0.0, 0.0}};
}

// Squeeze-dwell-unsqueeze M = Q(-r) R(phi) Q(r); the dwell phase makes the
// off-diagonal coefficient imaginary:
//   alpha = cosh^2 r e^{-i phi} - sinh^2 r e^{i phi}
//   beta  = -2 i cosh r sinh r sin phi
inline BogoliubovMap2 ramsey_sequence(double r, double phi) {
    return squeeze_map(-r) * rotation_map(phi) * squeeze_map(r);
}

// Per-mode squeeze parameters of two histories of the same Schmidt mode.
struct SchmidtModePair {
    double r1 = 0.0;
    double theta1 = 0.0;
    double r2 = 0.0;
    double theta2 = 0.0;
};

inline SchmidtModePair schmidt_pair_from(const BogoliubovMap2& first,
                                         const BogoliubovMap2& second) {
    SqueezeParam p1 = first.to_squeeze_param();
    SqueezeParam p2 = second.to_squeeze_param();
    return {p1.r(), p1.theta(), p2.r(), p2.theta()};
}

// Map a Schmidt-mode pair onto the two-branch superposition config whose
// overlap parameter is z = e^{i(theta1-theta2)} tanh r1 tanh r2.
inline JanusConfig schmidt_mode_tmjs(const SchmidtModePair& pair, double chi, double eta,
                                     double delta) {
    JanusConfig cfg;
    cfg.xi = SqueezeParam(pair.r1, pair.theta1);
    cfg.zeta = SqueezeParam(pair.r2, pair.theta2);
    cfg.chi = chi;
    cfg.eta = eta;
    cfg.delta = delta;
    cfg.validate();
    return cfg;
}

inline std::vector<double> uniform_grid(double a, double b, int n) {
    if (n < 2) throw std::invalid_argument("uniform_grid: need at least 2 points");
    std::vector<double> g(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        g[static_cast<size_t>(i)] = a + (b - a) * static_cast<double>(i) / (n - 1);
    return g;
}

// Residuals of the disentangling solutions
//   A = e^{i theta} tanh(r lambda), B = -2 ln cosh(r lambda),
//   C = -e^{-i theta} tanh(r lambda)
// against the ODE system
//   dA = xi - A^2 xi^*, dB = -2 A xi^*, dC = -xi^* e^B,
// with centered differences at interior grid nodes; returns the maximum
// absolute residual over the grid and the three equations.
inline double wei_norman_residuals(const SqueezeParam& p, const std::vector<double>& lambda_grid) {
    if (lambda_grid.size() < 3)
        throw std::invalid_argument("wei_norman_residuals: need at least 3 grid points");
    for (size_t i = 0; i < lambda_grid.size(); ++i) {
        if (!(lambda_grid[i] >= 0.0 && lambda_grid[i] <= 1.0))
            throw std::invalid_argument("wei_norman_residuals: grid must lie in [0, 1]");
        if (i > 0 && !(lambda_grid[i] > lambda_grid[i - 1]))
            throw std::invalid_argument("wei_norman_residuals: grid must be strictly increasing");
    }
    const cxd xi = p.xi();
    const cxd eit = std::polar(1.0, p.theta());
    const double r = p.r();

    auto A = [&](double l) { return eit * std::tanh(r * l); };
    auto B = [&](double l) { return -2.0 * std::log(std::cosh(r * l)); };
    auto C = [&](double l) { return -std::conj(eit) * std::tanh(r * l); };

    double worst = 0.0;
    for (size_t i = 1; i + 1 < lambda_grid.size(); ++i) {
        const double lm = lambda_grid[i - 1], l0 = lambda_grid[i], lp = lambda_grid[i + 1];
        const double span = lp - lm;
        const cxd dA = (A(lp) - A(lm)) / span;
        const cxd dB = (B(lp) - B(lm)) / span;
        const cxd dC = (C(lp) - C(lm)) / span;
        const cxd a0 = A(l0);
        worst = std::max(worst, std::abs(dA - (xi - a0 * a0 * std::conj(xi))));
        worst = std::max(worst, std::abs(dB + 2.0 * a0 * std::conj(xi)));
        worst = std::max(worst, std::abs(dC + std::conj(xi) * std::exp(B(l0))));
    }
    return worst;
}

// Reflector worldline v = p(u), either a callable or uniform samples.
class MirrorTrajectory {
  public:
    static MirrorTrajectory from_callable(std::function<double(double)> p) {
        MirrorTrajectory t;
        t.fn_ = std::move(p);
        return t;
    }

    static MirrorTrajectory from_samples(std::vector<double> u, std::vector<double> v) {
        if (u.size() != v.size() || u.size() < 5)
            throw std::invalid_argument("MirrorTrajectory: need >= 5 matching samples");
        for (size_t i = 1; i < u.size(); ++i) {
            if (!(u[i] > u[i - 1]))
                throw std::invalid_argument("MirrorTrajectory: u grid must be strictly increasing");
            if (!(v[i] > v[i - 1]))
                throw invalid_worldline("MirrorTrajectory: p must be strictly increasing");
        }
        MirrorTrajectory t;
        t.u_grid_ = std::move(u);
        t.values_ = std::move(v);
        return t;
    }

    bool sampled() const { return !u_grid_.empty(); }
    const std::vector<double>& u_grid() const { return u_grid_; }
    const std::vector<double>& values() const { return values_; }
    double operator()(double u) const { return fn_(u); }

  private:
    std::function<double(double)> fn_;
    std::vector<double> u_grid_;
    std::vector<double> values_;
};

namespace detail {

// 5-point central stencils on a uniform window f[-2..2]:
// f'   (12h)^-1 (f-2 - 8 f-1 + 8 f1 - f2)                O(h^4)
// f''  (12h^2)^-1 (-f-2 + 16 f-1 - 30 f0 + 16 f1 - f2)   O(h^4)
// f''' (2h^3)^-1 (-f-2 + 2 f-1 - 2 f1 + f2)              O(h^2)
inline double schwarzian_from_window(const double f[5], double h) {
    const double d1 = (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h);
    const double d2 = (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h * h);
    const double d3 = (-f[0] + 2.0 * f[1] - 2.0 * f[3] + f[4]) / (2.0 * h * h * h);
    if (!(d1 > 0.0))
        throw invalid_worldline("schwarzian_flux: p'(u) must be positive");
    const double ratio = d2 / d1;
    return d3 / d1 - 1.5 * ratio * ratio;
}

}  // namespace detail

// Radiated flux <T_uu> = -(1/24 pi) {p, u} with the Schwarzian derivative
// {p,u} = p'''/p' - (3/2)(p''/p')^2 from 5-point finite differences. Sampled
// trajectories use their own (locally uniform) grid spacing; callables use
// the given step.
inline double schwarzian_flux(const MirrorTrajectory& traj, double u, double step = 1e-3) {
    double f[5];
    double h = step;
    if (traj.sampled()) {
        const auto& ug = traj.u_grid();
        const auto& vals = traj.values();
        auto it = std::lower_bound(ug.begin(), ug.end(), u);
        long idx = it - ug.begin();
        if (idx > 0 && (idx == static_cast<long>(ug.size()) || u - ug[idx - 1] < ug[idx] - u)) --idx;
        if (idx < 2 || idx + 2 >= static_cast<long>(ug.size()))
            throw std::invalid_argument("schwarzian_flux: 5-point stencil does not fit the grid");
        h = ug[idx] - ug[idx - 1];
        for (int j = -2; j <= 2; ++j) {
            if (j > -2) {
                double hj = ug[idx + j] - ug[idx + j - 1];
                if (std::abs(hj - h) > 1e-6 * std::abs(h))
                    throw std::invalid_argument("schwarzian_flux: sample grid not uniform near u");
            }
            f[j + 2] = vals[idx + j];
        }
    } else {
        if (!(step > 0.0)) throw std::invalid_argument("schwarzian_flux: step must be > 0");
        for (int j = -2; j <= 2; ++j) f[j + 2] = traj(u + j * step);
    }
    const double schwarzian = detail::schwarzian_from_window(f, h);
    return -schwarzian / (24.0 * std::numbers::pi);
}

}  // namespace janus
