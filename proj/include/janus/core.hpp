// Core value types and error taxonomy shared by every module: complex squeeze
// parameters xi = r e^{i theta}, two-branch superposition configs, and the
// numeric guard constants used throughout.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace janus {

inline constexpr const char* version_string = "0.1.0";

using cxd = std::complex<double>;

// Guard constants. tail_tolerance bounds the squared amplitude allowed at a
// truncation edge; the epsilons keep callers out of catastrophic-cancellation
// zones near perfect destructive interference.
inline constexpr double tail_tolerance = 1e-14;
inline constexpr int max_cutoff = 512;
inline constexpr double norm_epsilon = 1e-14;
inline constexpr double mean_photon_epsilon = 1e-12;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configuration violates a structural precondition (weights both zero,
// negative weight, non-finite field).
struct invalid_config final : error {
    using error::error;
};

// The requested value diverges for this input (e.g. cross coherence at r=0).
struct divergent_input final : error {
    using error::error;
};

// The two superposed branches cancel: <Psi|Psi> <= norm_epsilon.
struct degenerate_superposition final : error {
    using error::error;
};

// Normalized coherences are undefined below mean_photon_epsilon.
struct mean_photon_underflow final : error {
    using error::error;
};

// Interference kernel vanishes identically (z = 0); no steering phase exists.
struct zero_kernel final : error {
    using error::error;
};

// Trajectory is not a valid reflector worldline (p' <= 0 or non-monotone).
struct invalid_worldline final : error {
    using error::error;
};

// More than half of the sweep cells failed to evaluate.
struct sweep_failure final : error {
    using error::error;
};

// Wrap an angle into [0, 2*pi).
inline double mod_2pi(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double m = std::fmod(a, two_pi);
    if (m < 0.0) m += two_pi;
    if (m >= two_pi) m = 0.0;
    return m;
}

// Principal phase in (-pi, pi], ties at -pi resolved to +pi.
inline double principal_phase(cxd v) {
    double p = std::atan2(v.imag(), v.real());
    if (p <= -std::numbers::pi) p = std::numbers::pi;
    return p;
}

// One complex squeeze parameter xi = r e^{i theta}. Derived quantities:
// x = tanh^2 r in [0,1) and nbar = sinh^2 r = x/(1-x).
class SqueezeParam {
  public:
    SqueezeParam() = default;
    SqueezeParam(double r, double theta) : r_(r), theta_(mod_2pi(theta)) {
        if (!std::isfinite(r) || r < 0.0)
            throw std::invalid_argument("SqueezeParam: squeeze magnitude must be finite and >= 0");
        if (!std::isfinite(theta))
            throw std::invalid_argument("SqueezeParam: squeeze phase must be finite");
    }
    explicit SqueezeParam(double r) : SqueezeParam(r, 0.0) {}

    double r() const { return r_; }
    double theta() const { return theta_; }
    double x() const { double t = std::tanh(r_); return t * t; }
    double nbar() const { double s = std::sinh(r_); return s * s; }
    cxd xi() const { return std::polar(r_, theta_); }
    // tanh r e^{i theta}: the ratio c_{n+1}/c_n of the twin-Fock expansion and
    // the coefficient of the annihilation condition (a - alpha b^dag)|xi> = 0.
    cxd alpha() const { return std::polar(std::tanh(r_), theta_); }

  private:
    double r_ = 0.0;
    double theta_ = 0.0;
};

// Superposition of two two-mode squeezed vacua: chi |xi> + eta e^{i delta} |zeta>.
// Weights are real and non-negative; delta is the external superposition phase.
struct JanusConfig {
    SqueezeParam xi;     // first branch, magnitude r and phase theta
    SqueezeParam zeta;   // second branch, magnitude s and phase phi
    double chi = 1.0;
    double eta = 0.0;
    double delta = 0.0;

    void validate() const {
        if (!std::isfinite(chi) || !std::isfinite(eta) || chi < 0.0 || eta < 0.0)
            throw invalid_config("JanusConfig: weights must be finite and >= 0");
        if (chi == 0.0 && eta == 0.0)
            throw invalid_config("JanusConfig: chi and eta must not both be zero");
        if (!std::isfinite(delta))
            throw invalid_config("JanusConfig: delta must be finite");
    }

    // Complex overlap parameter z = e^{i(theta-phi)} tanh r tanh s, |z| < 1
    // for finite squeezing. Argument of every cross-state kernel.
    cxd z() const {
        return std::polar(std::tanh(xi.r()) * std::tanh(zeta.r()),
                          xi.theta() - zeta.theta());
    }
};

}  // namespace janus
