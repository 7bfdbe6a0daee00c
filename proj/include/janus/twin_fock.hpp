// Truncated Fock-space brute-force engine on the twin-Fock subspace
// span{|n,n>}. Every closed-form module is tested against the direct sums
// implemented here; nothing in this file depends on those closed forms.
//
// Operator actions used below (restricted to the twin subspace):
//   a^k        |n,n> -> sqrt(n falling k) |n-k, n>
//   (ab)^k     |n,n> -> (n falling k)     |n-k, n-k>
//   K+ = a^dag b^dag : |n,n> -> (n+1) |n+1,n+1>
//   K- = ab          : |n,n> -> n     |n-1,n-1>
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "janus/core.hpp"

namespace janus {

// Amplitudes c_0..c_N over twin-Fock states |n,n>. cutoff_adequate records
// whether |c_N|^2 was below the tail tolerance at construction.
struct TwinFockVector {
    std::vector<cxd> amplitudes;
    bool cutoff_adequate = true;

    int cutoff() const { return static_cast<int>(amplitudes.size()) - 1; }
    double norm_squared() const {
        double s = 0.0;
        for (const auto& c : amplitudes) s += std::norm(c);
        return s;
    }
};

// Falling factorial n(n-1)...(n-k+1) in floating point; 0 for n < k.
inline double falling_factorial(long long n, int k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: k must be >= 0");
    if (n < k) return 0.0;
    double v = 1.0;
    for (int j = 0; j < k; ++j) v *= static_cast<double>(n - j);
    return v;
}

// Smallest N with tanh^{2N} r < tau (geometric tail), capped at max_cutoff.
inline int adaptive_cutoff(const SqueezeParam& p, double tau = tail_tolerance) {
    double x = p.x();
    if (x <= 0.0) return 8;
    int n = static_cast<int>(std::ceil(std::log(tau) / std::log(x))) + 1;
    return std::clamp(n, 8, max_cutoff);
}

inline int adaptive_cutoff(const JanusConfig& cfg, double tau = tail_tolerance) {
    return std::max(adaptive_cutoff(cfg.xi, tau), adaptive_cutoff(cfg.zeta, tau));
}

// c_n = (tanh r e^{i theta})^n / cosh r for n <= cutoff.
inline TwinFockVector build_tmss_vector(const SqueezeParam& p, int cutoff,
                                        double tau = tail_tolerance) {
    if (cutoff < 0) throw std::invalid_argument("build_tmss_vector: cutoff must be >= 0");
    TwinFockVector v;
    v.amplitudes.resize(static_cast<size_t>(cutoff) + 1);
    const cxd alpha = p.alpha();
    cxd c = 1.0 / std::cosh(p.r());
    for (int n = 0; n <= cutoff; ++n) {
        v.amplitudes[static_cast<size_t>(n)] = c;
        c *= alpha;
    }
    v.cutoff_adequate = std::norm(v.amplitudes.back()) <= tau;
    return v;
}

// c_n = chi c_n(xi) + eta e^{i delta} c_n(zeta); not renormalized.
inline TwinFockVector build_tmjs_vector(const JanusConfig& cfg, int cutoff,
                                        double tau = tail_tolerance) {
    cfg.validate();
    TwinFockVector u = build_tmss_vector(cfg.xi, cutoff, tau);
    TwinFockVector w = build_tmss_vector(cfg.zeta, cutoff, tau);
    const cxd weight = cfg.eta * std::polar(1.0, cfg.delta);
    TwinFockVector v;
    v.amplitudes.resize(static_cast<size_t>(cutoff) + 1);
    for (int n = 0; n <= cutoff; ++n)
        v.amplitudes[static_cast<size_t>(n)] =
            cfg.chi * u.amplitudes[static_cast<size_t>(n)] + weight * w.amplitudes[static_cast<size_t>(n)];
    v.cutoff_adequate = u.cutoff_adequate && w.cutoff_adequate;
    return v;
}

// <u|v> = sum conj(u_n) v_n; the shorter vector is padded with zeros.
inline cxd inner_product(const TwinFockVector& u, const TwinFockVector& v) {
    size_t n = std::min(u.amplitudes.size(), v.amplitudes.size());
    cxd s = 0.0;
    for (size_t i = 0; i < n; ++i) s += std::conj(u.amplitudes[i]) * v.amplitudes[i];
    return s;
}

namespace detail {

inline double checked_norm_squared(const TwinFockVector& v) {
    double n2 = v.norm_squared();
    if (!(n2 > 1e-300))
        throw degenerate_superposition("factorial moment of a (numerically) zero vector");
    return n2;
}

}  // namespace detail

// <(a^dag)^k a^k> / <v|v> = sum (n falling k) |c_n|^2 / sum |c_n|^2.
inline double factorial_moment_single(const TwinFockVector& v, int k) {
    if (k < 0) throw std::invalid_argument("factorial_moment_single: k must be >= 0");
    double num = 0.0;
    for (size_t n = 0; n < v.amplitudes.size(); ++n)
        num += falling_factorial(static_cast<long long>(n), k) * std::norm(v.amplitudes[n]);
    return num / detail::checked_norm_squared(v);
}

// <(a^dag b^dag)^k (ab)^k> / <v|v>: weight is the squared falling factorial.
inline double factorial_moment_cross(const TwinFockVector& v, int k) {
    if (k < 0) throw std::invalid_argument("factorial_moment_cross: k must be >= 0");
    double num = 0.0;
    for (size_t n = 0; n < v.amplitudes.size(); ++n) {
        double f = falling_factorial(static_cast<long long>(n), k);
        num += f * f * std::norm(v.amplitudes[n]);
    }
    return num / detail::checked_norm_squared(v);
}

enum class MomentKind { single_mode, cross_mode };

// Off-diagonal moment <u|(a^dag)^k a^k|v> or <u|(a^dag b^dag)^k (ab)^k|v>,
// direct summation, no normalization.
inline cxd cross_state_moment(const TwinFockVector& u, const TwinFockVector& v, int k,
                              MomentKind kind) {
    if (k < 0) throw std::invalid_argument("cross_state_moment: k must be >= 0");
    size_t n = std::min(u.amplitudes.size(), v.amplitudes.size());
    cxd s = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double f = falling_factorial(static_cast<long long>(i), k);
        if (kind == MomentKind::cross_mode) f *= f;
        s += f * std::conj(u.amplitudes[i]) * v.amplitudes[i];
    }
    return s;
}

namespace detail {

// y = exp(Op) v for a linear operator given as a matrix-free applier,
// by scaling (2^s stages with scaled norm <= 1) and a truncated Taylor
// series per stage. Stage tolerance is tol / #stages.
template <class Apply>
void expmv_inplace(Apply&& apply, std::vector<cxd>& v, double op_norm, double tol) {
    int s = 0;
    while ((op_norm / static_cast<double>(1ULL << s)) > 1.0 && s < 60) ++s;
    const double inv_scale = 1.0 / static_cast<double>(1ULL << s);
    const long stages = 1L << s;
    const double stage_tol = tol / static_cast<double>(stages);

    std::vector<cxd> term(v.size()), next(v.size()), acc(v.size());
    auto norm2 = [](const std::vector<cxd>& w) {
        double r = 0.0;
        for (const auto& c : w) r += std::norm(c);
        return std::sqrt(r);
    };

    for (long stage = 0; stage < stages; ++stage) {
        acc = v;
        term = v;
        for (int j = 1; j <= 80; ++j) {
            apply(term, next);
            const double f = inv_scale / static_cast<double>(j);
            for (size_t i = 0; i < v.size(); ++i) {
                next[i] *= f;
                acc[i] += next[i];
            }
            term.swap(next);
            if (j >= 2 && norm2(term) <= stage_tol * std::max(1.0, norm2(acc))) break;
        }
        v = acc;
    }
}

}  // namespace detail

// Numerically exponentiate xi K+ - xi^* K- on the twin-Fock subspace and
// apply to |0,0>. Independent check of the disentangled closed form: the
// result must coincide with build_tmss_vector.
inline TwinFockVector su11_matexp_apply(const SqueezeParam& p, int cutoff,
                                        double tol = 1e-12, double tau = tail_tolerance) {
    if (cutoff < 0) throw std::invalid_argument("su11_matexp_apply: cutoff must be >= 0");
    const cxd xi = p.xi();
    const size_t dim = static_cast<size_t>(cutoff) + 1;

    // (G c)_m = xi * m * c_{m-1} - conj(xi) * (m+1) * c_{m+1}
    auto apply = [&](const std::vector<cxd>& in, std::vector<cxd>& out) {
        for (size_t m = 0; m < dim; ++m) {
            cxd val = 0.0;
            if (m >= 1) val += xi * static_cast<double>(m) * in[m - 1];
            if (m + 1 < dim) val -= std::conj(xi) * static_cast<double>(m + 1) * in[m + 1];
            out[m] = val;
        }
    };

    std::vector<cxd> v(dim, 0.0);
    v[0] = 1.0;
    const double op_norm = p.r() * (2.0 * static_cast<double>(cutoff) + 1.0);
    detail::expmv_inplace(apply, v, op_norm, tol);

    TwinFockVector out;
    out.amplitudes = std::move(v);
    out.cutoff_adequate = std::norm(out.amplitudes.back()) <= tau;
    return out;
}

}  // namespace janus
