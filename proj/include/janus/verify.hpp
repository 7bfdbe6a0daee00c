// Cross-module verification: every closed form is compared against the
// truncated Fock-space oracle or an independent finite-difference /
// recurrence route, with one named check per invariant. Returns a report;
// callers decide how to print it and what exit status to use.
#pragma once

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "janus/core.hpp"
#include "janus/dynamics.hpp"
#include "janus/polynomials.hpp"
#include "janus/random.hpp"
#include "janus/tmjs.hpp"
#include "janus/tmss.hpp"
#include "janus/twin_fock.hpp"
#include "janus/wigner.hpp"

namespace janus {

enum class VerifyLevel { quick, full };

struct VerifyCheck {
    std::string name;
    double deviation = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    int exit_status() const { return all_passed() ? 0 : 1; }
};

struct VerifyOptions {
    std::uint64_t seed = 20250811;
    // test hook: corrupt one P_2 coefficient before the table comparison, to
    // prove the suite detects a broken polynomial build
    bool perturb_p2 = false;
};

namespace detail {

inline void add_check(VerifyReport& rep, const std::string& name, double deviation,
                      double threshold) {
    rep.checks.push_back({name, deviation, threshold, deviation <= threshold});
}

}  // namespace detail

inline VerifyReport verify_suite(VerifyLevel level, const VerifyOptions& opts = {}) {
    VerifyReport rep;
    const bool full = level == VerifyLevel::full;
    Rng rng(opts.seed);

    // printed squeezing-polynomial tables, k = 1..4
    {
        const std::vector<std::vector<long long>> inner_expected = {
            {1, 1}, {1, 4, 1}, {1, 9, 9, 1}, {1, 16, 36, 16, 1}};
        const std::vector<long long> scale_expected = {1, 4, 36, 576};
        double dev = 0.0;
        for (int k = 1; k <= 4; ++k) {
            auto p = squeezing_polynomial(k);
            std::vector<long long> inner = p.inner;
            if (opts.perturb_p2 && k == 2) inner[1] += 1;
            if (p.scale != scale_expected[static_cast<size_t>(k - 1)]) dev += 1.0;
            if (inner != inner_expected[static_cast<size_t>(k - 1)]) dev += 1.0;
        }
        detail::add_check(rep, "squeezing-polynomial-tables", dev, 0.0);
    }

    // inner coefficient sum equals C(2k,k)
    {
        double dev = 0.0;
        for (int k = 0; k <= polynomial_k_max; ++k) {
            auto p = squeezing_polynomial(k);
            long long sum = 0;
            for (long long c : p.inner) sum += c;
            long long expected = detail::binomial_row(2 * k)[static_cast<size_t>(k)];
            dev = std::max(dev, static_cast<double>(std::abs(sum - expected)));
        }
        detail::add_check(rep, "polynomial-vandermonde-sum", dev, 0.0);
    }

    // three equivalent representations of P_k
    {
        double dev = 0.0;
        for (int k = 0; k <= 8; ++k)
            for (double x = 0.1; x < 0.95; x += 0.1) {
                auto p = squeezing_polynomial(k);
                double direct = p.eval(x);
                double xk = std::pow(x, k);
                double hyp = static_cast<double>(p.scale) * xk * eval_2f1_terminating(k, x);
                double euler = static_cast<double>(p.scale) * xk * eval_2f1_euler_transformed(k, x);
                dev = std::max(dev, std::abs(hyp - direct) / direct);
                dev = std::max(dev, std::abs(euler - direct) / direct);
                dev = std::max(dev, legendre_cross_check(k, x));
            }
        detail::add_check(rep, "polynomial-three-representations", dev, 1e-10);
    }

    // thermal marginal moments of a single TMSS vs oracle
    {
        double dev = 0.0;
        for (double r : {0.3, 0.8, 1.2}) {
            SqueezeParam p(r, rng.uniform(0.0, 6.28));
            auto v = build_tmss_vector(p, 256);
            for (int k = 1; k <= 5; ++k) {
                double closed = factorial(k) * std::pow(p.nbar(), k);
                dev = std::max(dev, std::abs(factorial_moment_single(v, k) - closed) / closed);
            }
        }
        detail::add_check(rep, "tmss-thermal-moments", dev, 1e-8);
    }

    // cross-mode moments F_k vs oracle
    {
        double dev = 0.0;
        for (double r : {0.3, 0.8, 1.2}) {
            SqueezeParam p(r, rng.uniform(0.0, 6.28));
            auto v = build_tmss_vector(p, 256);
            for (int k = 1; k <= 4; ++k) {
                double closed = eval_Fk(k, p.x());
                dev = std::max(dev, std::abs(factorial_moment_cross(v, k) - closed) / closed);
            }
        }
        detail::add_check(rep, "tmss-cross-moments", dev, 1e-8);
    }

    // k = 0 off-diagonal kernel: <zeta|xi> = 1/(cosh r cosh s (1-z))
    {
        double dev = 0.0;
        for (int t = 0; t < 8; ++t) {
            JanusConfig cfg{SqueezeParam(rng.uniform(0.1, 1.0), rng.uniform(0.0, 6.28)),
                            SqueezeParam(rng.uniform(0.1, 1.0), rng.uniform(0.0, 6.28)), 1.0, 0.0,
                            0.0};
            auto u = build_tmss_vector(cfg.zeta, 200);
            auto v = build_tmss_vector(cfg.xi, 200);
            cxd direct = cross_state_moment(u, v, 0, MomentKind::single_mode);
            cxd closed = kernel_single(cfg, 0).value;
            dev = std::max(dev, std::abs(direct - closed));
        }
        detail::add_check(rep, "overlap-kernel", dev, 1e-10);
    }

    // SU(1,1) disentangling: generator exponential vs closed-form expansion
    {
        double dev = 0.0;
        int n = full ? 10 : 4;
        for (int t = 0; t < n; ++t) {
            SqueezeParam p(rng.uniform(0.1, 1.2), rng.uniform(0.0, 6.28));
            auto via_exp = su11_matexp_apply(p, 80);
            auto closed = build_tmss_vector(p, 80);
            double d2 = 0.0;
            for (size_t i = 0; i < via_exp.amplitudes.size(); ++i)
                d2 += std::norm(via_exp.amplitudes[i] - closed.amplitudes[i]);
            dev = std::max(dev, std::sqrt(d2));
        }
        detail::add_check(rep, "su11-disentangle-identity", dev, 1e-8);
    }

    // bilinear rule: closed-form normalized expectations vs oracle
    {
        double dev = 0.0;
        int n = full ? 200 : 20;
        for (int t = 0; t < n; ++t) {
            JanusConfig cfg{SqueezeParam(rng.uniform(0.05, 1.0), rng.uniform(0.0, 6.28)),
                            SqueezeParam(rng.uniform(0.05, 1.0), rng.uniform(0.0, 6.28)),
                            rng.uniform(0.2, 1.0), rng.uniform(0.2, 1.0), rng.uniform(0.0, 6.28)};
            double w = std::hypot(cfg.chi, cfg.eta);
            cfg.chi /= w;
            cfg.eta /= w;
            double norm;
            try {
                norm = janus_norm(cfg);
            } catch (const degenerate_superposition&) {
                continue;
            }
            if (norm < 1e-10) continue;
            auto v = build_tmjs_vector(cfg, 160);
            double mean_o = factorial_moment_single(v, 1);
            dev = std::max(dev, std::abs(mean_o - mean_photon_tmjs(cfg)) / mean_o);
            for (int k = 1; k <= 4; ++k) {
                double gs = factorial_moment_single(v, k) / std::pow(mean_o, k);
                double gc = factorial_moment_cross(v, k) / std::pow(mean_o, 2 * k);
                dev = std::max(dev, std::abs(gs - g_single_tmjs(cfg, k)) / gs);
                dev = std::max(dev, std::abs(gc - g_cross_tmjs(cfg, k)) / gc);
            }
        }
        detail::add_check(rep, "tmjs-bilinear-consistency", dev, 1e-7);
    }

    // squeeze-dwell-unsqueeze phase law
    {
        double dev = 0.0;
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 20; ++j) {
                double r = 2.0 * i / 19.0;
                double phi = 2.0 * std::numbers::pi * j / 19.0;
                auto m = ramsey_sequence(r, phi);
                dev = std::max(dev, std::abs(m.beta.real()));
                dev = std::max(dev, std::abs(m.beta.imag() +
                                             2.0 * std::cosh(r) * std::sinh(r) * std::sin(phi)));
                dev = std::max(dev, std::abs(m.su11_defect()));
            }
        detail::add_check(rep, "ramsey-phase-law", dev, 1e-12);
    }

    // Schwarzian flux reference trajectories
    {
        auto affine = MirrorTrajectory::from_callable([](double u) { return 2.0 * u + 1.0; });
        auto mobius = MirrorTrajectory::from_callable(
            [](double u) { return (2.0 * u + 1.0) / (u + 3.0); });
        auto expo = MirrorTrajectory::from_callable([](double u) { return -std::exp(-u); });
        double dev = std::abs(schwarzian_flux(affine, 0.3));
        dev = std::max(dev, std::abs(schwarzian_flux(mobius, 0.5)));
        dev = std::max(dev, std::abs(schwarzian_flux(expo, 0.2) -
                                     1.0 / (48.0 * std::numbers::pi)));
        detail::add_check(rep, "schwarzian-reference-trajectories", dev, 1e-6);
    }

    // Wei-Norman solutions satisfy the ODE system
    {
        double res = wei_norman_residuals(SqueezeParam(0.7, 1.1), uniform_grid(0.0, 1.0, 1001));
        detail::add_check(rep, "wei-norman-residuals", res, 1e-6);
        if (full) {
            double res2 =
                wei_norman_residuals(SqueezeParam(0.7, 1.1), uniform_grid(0.0, 1.0, 2001));
            detail::add_check(rep, "wei-norman-refinement-ratio", std::abs(res / res2 - 4.0), 0.5);
        }
    }

    // Wigner parity identity at the origin
    {
        double dev = 0.0;
        SingleModeJanus anti{SqueezeParam(0.8, std::numbers::pi), SqueezeParam(0.8, 0.0),
                             1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), std::numbers::pi};
        SingleModeJanus quad{SqueezeParam(0.8, std::numbers::pi / 2), SqueezeParam(0.8, 0.0),
                             1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), std::numbers::pi};
        dev = std::max(std::abs(parity_check(anti)), std::abs(parity_check(quad)));
        detail::add_check(rep, "wigner-parity-identity", dev, 1e-6);

        if (full) {
            auto g = wigner_grid(anti, 4.5, 201);
            double neg_ok = g.min_value < -1e-3 ? 0.0 : 1.0;
            detail::add_check(rep, "wigner-negativity-antisymmetric", neg_ok, 0.0);
        }
    }

    return rep;
}

inline void print_report(const VerifyReport& rep, std::ostream& os) {
    for (const auto& c : rep.checks) {
        os << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  deviation=" << c.deviation
           << "  threshold=" << c.threshold << "\n";
    }
    os << (rep.all_passed() ? "verify: all checks passed\n" : "verify: FAILURES present\n");
}

}  // namespace janus
