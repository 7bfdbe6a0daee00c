// Closed-form photon statistics of a single two-mode squeezed vacuum: the
// non-interfering baseline. Single-mode marginals are thermal (g^(k) = k!);
// cross-mode coherences are P_k(x)/x^{2k} and diverge as r -> 0.
#pragma once

#include <cmath>

#include "janus/core.hpp"
#include "janus/polynomials.hpp"

namespace janus {

enum class CoherenceKind { single_mode, cross_mode };

struct TmssStat {
    int k = 1;
    double value = 0.0;
    CoherenceKind kind = CoherenceKind::single_mode;
};

// Thermal marginal: g_a^(k) = k! independent of r. k >= 1.
inline double g_single_tmss(int k) {
    if (k < 1) throw std::invalid_argument("g_single_tmss: order must be >= 1");
    return factorial(k);
}

// Cross-mode coherence g_ab^(k) = P_k(x)/x^{2k} with x = tanh^2 r.
// Evaluated as (k!)^2 * inner(x) / x^k, which is stable at small x.
inline double g_cross_tmss(int k, const SqueezeParam& p) {
    if (k < 1) throw std::invalid_argument("g_cross_tmss: order must be >= 1");
    if (p.r() == 0.0)
        throw divergent_input("g_cross_tmss: diverges at r = 0 (mean photon number vanishes)");
    auto poly = squeezing_polynomial(k);
    double x = p.x();
    double xk = 1.0;
    for (int j = 0; j < k; ++j) xk *= x;
    return static_cast<double>(poly.scale) * poly.eval_inner(x) / xk;
}

// <a^dag a> = sinh^2 r.
inline double mean_photon_tmss(const SqueezeParam& p) { return p.nbar(); }

inline TmssStat tmss_stat(int k, CoherenceKind kind, const SqueezeParam& p) {
    if (kind == CoherenceKind::single_mode) return {k, g_single_tmss(k), kind};
    return {k, g_cross_tmss(k, p), kind};
}

}  // namespace janus
