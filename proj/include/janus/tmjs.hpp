// Phase-steerable statistics of the two-mode Janus state
// |Psi> = chi |xi> + eta e^{i delta} |zeta>.
//
// Every expectation value follows the bilinear rule
//   <O>_Psi = chi^2 <xi|O|xi> + eta^2 <zeta|O|zeta>
//             + 2 chi eta Re[e^{-i delta} <zeta|O|xi>],
// with off-diagonal kernels sharing the diagonal functional form evaluated at
// the complex overlap z = e^{i(theta-phi)} tanh r tanh s:
//   <zeta|(a^dag)^k a^k|xi>          = k!/(cosh r cosh s) z^k/(1-z)^{k+1}
//   <zeta|(a^dag b^dag)^k (ab)^k|xi> = P_k(z)/((1-z)^{2k+1} cosh r cosh s)
//
// Interference terms take the universal form 2 chi eta |f_k| cos(phi_k - delta);
// delta = phi_k is fully constructive, delta = phi_k + pi fully destructive.
//
// All reported expectations divide by N = <Psi|Psi>; because N^{k-1} does not
// cancel in g^(k) for k > 1 this choice is observable, and it is the one the
// truncated-Fock oracle reproduces. An unnormalized variant is kept for
// comparison.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "janus/core.hpp"
#include "janus/polynomials.hpp"
#include "janus/tmss.hpp"

namespace janus {

enum class KernelKind { single_mode, cross_mode, overlap };
enum class Normalization { normalized, unnormalized };

struct InterferenceKernel {
    int k = 0;
    cxd value{0.0, 0.0};
    double magnitude = 0.0;
    double phase = 0.0;  // in (-pi, pi]
    KernelKind kind = KernelKind::overlap;
};

inline cxd overlap_z(const JanusConfig& cfg) { return cfg.z(); }

namespace detail {

inline InterferenceKernel make_kernel(int k, cxd value, KernelKind kind) {
    InterferenceKernel kern;
    kern.k = k;
    kern.value = value;
    kern.magnitude = std::abs(value);
    kern.phase = kern.magnitude > 0.0 ? principal_phase(value) : 0.0;
    kern.kind = kind;
    return kern;
}

inline double cosh_product(const JanusConfig& cfg) {
    return std::cosh(cfg.xi.r()) * std::cosh(cfg.zeta.r());
}

}  // namespace detail

// k!/(cosh r cosh s) z^k/(1-z)^{k+1}. k = 0 is the state overlap <zeta|xi>.
inline InterferenceKernel kernel_single(const JanusConfig& cfg, int k) {
    if (k < 0) throw std::invalid_argument("kernel_single: k must be >= 0");
    const cxd z = cfg.z();
    cxd num = factorial(k);
    for (int j = 0; j < k; ++j) num *= z;
    cxd den = 1.0 - z;
    for (int j = 0; j < k; ++j) den *= (1.0 - z);
    cxd value = num / (den * detail::cosh_product(cfg));
    return detail::make_kernel(k, value, k == 0 ? KernelKind::overlap : KernelKind::single_mode);
}

// P_k(z)/((1-z)^{2k+1} cosh r cosh s); P_0 = 1 reproduces the overlap.
inline InterferenceKernel kernel_cross(const JanusConfig& cfg, int k) {
    if (k < 0) throw std::invalid_argument("kernel_cross: k must be >= 0");
    const cxd z = cfg.z();
    cxd num = squeezing_polynomial(k).eval(z);
    cxd den = 1.0 - z;
    for (int j = 0; j < 2 * k; ++j) den *= (1.0 - z);
    cxd value = num / (den * detail::cosh_product(cfg));
    return detail::make_kernel(k, value, k == 0 ? KernelKind::overlap : KernelKind::cross_mode);
}

// N = <Psi|Psi> = chi^2 + eta^2 + 2 chi eta Re[e^{-i delta} <zeta|xi>].
inline double janus_norm(const JanusConfig& cfg) {
    cfg.validate();
    const cxd ov = kernel_single(cfg, 0).value;
    double n = cfg.chi * cfg.chi + cfg.eta * cfg.eta +
               2.0 * cfg.chi * cfg.eta * std::real(std::polar(1.0, -cfg.delta) * ov);
    if (n <= norm_epsilon)
        throw degenerate_superposition("janus_norm: superposed components cancel");
    return n;
}

namespace detail {

// Unnormalized k-th factorial moments (bilinear rule, no division by N).
inline double moment_single_raw(const JanusConfig& cfg, int k) {
    double diag = factorial(k) * (cfg.chi * cfg.chi * std::pow(cfg.xi.nbar(), k) +
                                  cfg.eta * cfg.eta * std::pow(cfg.zeta.nbar(), k));
    cxd kern = kernel_single(cfg, k).value;
    return diag + 2.0 * cfg.chi * cfg.eta * std::real(std::polar(1.0, -cfg.delta) * kern);
}

inline double moment_cross_raw(const JanusConfig& cfg, int k) {
    double diag = cfg.chi * cfg.chi * eval_Fk(k, cfg.xi.x()) +
                  cfg.eta * cfg.eta * eval_Fk(k, cfg.zeta.x());
    cxd kern = kernel_cross(cfg, k).value;
    return diag + 2.0 * cfg.chi * cfg.eta * std::real(std::polar(1.0, -cfg.delta) * kern);
}

}  // namespace detail

// <a^dag a>_Psi (equal to <b^dag b>_Psi by twin symmetry).
inline double mean_photon_tmjs(const JanusConfig& cfg) {
    return detail::moment_single_raw(cfg, 1) / janus_norm(cfg);
}

// g_a^(k) = <(a^dag)^k a^k> / <a^dag a>^k.
inline double g_single_tmjs(const JanusConfig& cfg, int k,
                            Normalization norm = Normalization::normalized) {
    if (k < 1) throw std::invalid_argument("g_single_tmjs: order must be >= 1");
    const double n = janus_norm(cfg);
    double mean = detail::moment_single_raw(cfg, 1);
    double moment = detail::moment_single_raw(cfg, k);
    if (norm == Normalization::normalized) {
        mean /= n;
        moment /= n;
    }
    if (mean < mean_photon_epsilon)
        throw mean_photon_underflow("g_single_tmjs: mean photon number below threshold");
    return moment / std::pow(mean, k);
}

// g_ab^(k) = <(a^dag b^dag)^k (ab)^k> / <a^dag a>^{2k}.
inline double g_cross_tmjs(const JanusConfig& cfg, int k,
                           Normalization norm = Normalization::normalized) {
    if (k < 1) throw std::invalid_argument("g_cross_tmjs: order must be >= 1");
    const double n = janus_norm(cfg);
    double mean = detail::moment_single_raw(cfg, 1);
    double moment = detail::moment_cross_raw(cfg, k);
    if (norm == Normalization::normalized) {
        mean /= n;
        moment /= n;
    }
    if (mean < mean_photon_epsilon)
        throw mean_photon_underflow("g_cross_tmjs: mean photon number below threshold");
    return moment / std::pow(mean, 2 * k);
}

struct SteeringPhases {
    double phi_k = 0.0;               // kernel phase in (-pi, pi]
    double delta_constructive = 0.0;  // phi_k mod 2pi
    double delta_destructive = 0.0;   // phi_k + pi mod 2pi
};

// Phase-selection rule: the interference term 2 chi eta |f_k| cos(phi_k - delta)
// is maximized at delta = phi_k and minimized at delta = phi_k + pi.
inline SteeringPhases steering_phase(const JanusConfig& cfg, int k, CoherenceKind kind) {
    InterferenceKernel kern = (kind == CoherenceKind::single_mode) ? kernel_single(cfg, k)
                                                                   : kernel_cross(cfg, k);
    if (kern.magnitude == 0.0)
        throw zero_kernel("steering_phase: interference kernel vanishes (z = 0)");
    SteeringPhases out;
    out.phi_k = kern.phase;
    out.delta_constructive = mod_2pi(kern.phase);
    out.delta_destructive = mod_2pi(kern.phase + std::numbers::pi);
    return out;
}

// Bundle of every moment and coherence up to k_max (index by k; entry 0 of the
// g arrays is unused).
struct TmjsMoments {
    double norm = 0.0;
    double mean_photon = 0.0;
    std::vector<double> moment_single;  // <(a^dag)^k a^k>, normalized
    std::vector<double> moment_cross;   // <(a^dag b^dag)^k (ab)^k>, normalized
    std::vector<double> g_single;
    std::vector<double> g_cross;
};

inline TmjsMoments compute_tmjs_moments(const JanusConfig& cfg, int k_max) {
    if (k_max < 1) throw std::invalid_argument("compute_tmjs_moments: k_max must be >= 1");
    TmjsMoments m;
    m.norm = janus_norm(cfg);
    m.mean_photon = mean_photon_tmjs(cfg);
    m.moment_single.assign(static_cast<size_t>(k_max) + 1, 1.0);
    m.moment_cross.assign(static_cast<size_t>(k_max) + 1, 1.0);
    m.g_single.assign(static_cast<size_t>(k_max) + 1, 0.0);
    m.g_cross.assign(static_cast<size_t>(k_max) + 1, 0.0);
    for (int k = 1; k <= k_max; ++k) {
        m.moment_single[static_cast<size_t>(k)] = detail::moment_single_raw(cfg, k) / m.norm;
        m.moment_cross[static_cast<size_t>(k)] = detail::moment_cross_raw(cfg, k) / m.norm;
        m.g_single[static_cast<size_t>(k)] = g_single_tmjs(cfg, k);
        m.g_cross[static_cast<size_t>(k)] = g_cross_tmjs(cfg, k);
    }
    return m;
}

}  // namespace janus
