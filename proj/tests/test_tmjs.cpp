#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "janus/random.hpp"
#include "janus/tmjs.hpp"
#include "janus/tmss.hpp"
#include "janus/twin_fock.hpp"

using namespace janus;
using Catch::Approx;
constexpr double pi = std::numbers::pi;
const double w2 = 1.0 / std::sqrt(2.0);

namespace {

JanusConfig random_config(Rng& rng) {
    JanusConfig cfg{SqueezeParam(rng.uniform(0.05, 1.0), rng.uniform(0.0, 2 * pi)),
                    SqueezeParam(rng.uniform(0.05, 1.0), rng.uniform(0.0, 2 * pi)),
                    rng.uniform(0.2, 1.0), rng.uniform(0.2, 1.0), rng.uniform(0.0, 2 * pi)};
    double w = std::hypot(cfg.chi, cfg.eta);
    cfg.chi /= w;
    cfg.eta /= w;
    return cfg;
}

}  // namespace

TEST_CASE("overlap parameter", "[tmjs]") {
    CHECK(overlap_z({SqueezeParam(0.0, 0.0), SqueezeParam(0.7, 0.0), 1, 0, 0}) == cxd{0.0, 0.0});
    auto z_aligned = overlap_z({SqueezeParam(0.5, 1.1), SqueezeParam(0.5, 1.1), w2, w2, 0});
    CHECK(z_aligned.real() == Approx(SqueezeParam(0.5, 0).x()).margin(1e-15));
    CHECK(z_aligned.imag() == Approx(0.0).margin(1e-15));
    // antisymmetric phase: z = -tanh^2(0.8)
    auto z_anti = overlap_z({SqueezeParam(0.8, pi), SqueezeParam(0.8, 0.0), w2, w2, 0});
    CHECK(z_anti.real() == Approx(-0.4409448322677561).margin(1e-12));
    CHECK(std::abs(z_anti.imag()) < 1e-15);
}

TEST_CASE("single-mode kernel", "[tmjs]") {
    SECTION("k=0 with identical branches is unity") {
        JanusConfig cfg{SqueezeParam(0.7, 0.3), SqueezeParam(0.7, 0.3), w2, w2, 0.0};
        CHECK(std::abs(kernel_single(cfg, 0).value - cxd{1.0, 0.0}) < 1e-12);
        CHECK(kernel_single(cfg, 0).kind == KernelKind::overlap);
    }
    SECTION("k=1 aligned phases: real positive, oracle matches") {
        JanusConfig cfg{SqueezeParam(0.5, 0.0), SqueezeParam(0.5, 0.0), w2, w2, 0.0};
        auto kern = kernel_single(cfg, 1);
        CHECK(kern.value.real() > 0.0);
        CHECK(kern.phase == 0.0);
        auto zeta = build_tmss_vector(cfg.zeta, 150);
        auto xi = build_tmss_vector(cfg.xi, 150);
        cxd oracle = cross_state_moment(zeta, xi, 1, MomentKind::single_mode);
        CHECK(std::abs(kern.value - oracle) < 1e-10);
    }
    SECTION("vacuum second branch kills every k >= 1 kernel") {
        JanusConfig cfg{SqueezeParam(0.9, 0.4), SqueezeParam(0.0, 0.0), w2, w2, 0.0};
        for (int k = 1; k <= 4; ++k) CHECK(kernel_single(cfg, k).magnitude == 0.0);
    }
}

TEST_CASE("cross-mode kernel", "[tmjs]") {
    SECTION("k=0 coincides with the single-mode kernel") {
        JanusConfig cfg{SqueezeParam(0.6, 1.0), SqueezeParam(0.8, 0.1), w2, w2, 0.0};
        CHECK(std::abs(kernel_cross(cfg, 0).value - kernel_single(cfg, 0).value) < 1e-15);
    }
    SECTION("quadrature phase, oracle matches") {
        JanusConfig cfg{SqueezeParam(0.7, pi / 2), SqueezeParam(0.7, 0.0), w2, w2, 0.0};
        auto zeta = build_tmss_vector(cfg.zeta, 200);
        auto xi = build_tmss_vector(cfg.xi, 200);
        cxd oracle = cross_state_moment(zeta, xi, 2, MomentKind::cross_mode);
        CHECK(std::abs(kernel_cross(cfg, 2).value - oracle) < 1e-9);
    }
    SECTION("real overlap gives phase 0 or pi") {
        JanusConfig plus{SqueezeParam(0.6, 0.0), SqueezeParam(0.5, 0.0), w2, w2, 0.0};
        JanusConfig minus{SqueezeParam(0.6, pi), SqueezeParam(0.5, 0.0), w2, w2, 0.0};
        for (int k = 1; k <= 3; ++k) {
            double ph_plus = kernel_cross(plus, k).phase;
            double ph_minus = kernel_cross(minus, k).phase;
            CHECK((std::abs(ph_plus) < 1e-14 || std::abs(std::abs(ph_plus) - pi) < 1e-14));
            CHECK((std::abs(ph_minus) < 1e-14 || std::abs(std::abs(ph_minus) - pi) < 1e-14));
        }
    }
}

TEST_CASE("superposition norm", "[tmjs]") {
    CHECK(janus_norm({SqueezeParam(0.7, 0.2), SqueezeParam(0.3, 0.0), 1.0, 0.0, 0.0}) ==
          Approx(1.0).margin(1e-14));
    JanusConfig same{SqueezeParam(0.5, 0.8), SqueezeParam(0.5, 0.8), w2, w2, 0.0};
    CHECK(janus_norm(same) == Approx(2.0).margin(1e-12));
    JanusConfig cancel = same;
    cancel.delta = pi;
    CHECK_THROWS_AS(janus_norm(cancel), degenerate_superposition);
}

TEST_CASE("mean photon number of the superposition", "[tmjs]") {
    SECTION("single branch") {
        JanusConfig cfg{SqueezeParam(0.8, 0.0), SqueezeParam(0.2, 0.0), 1.0, 0.0, 0.0};
        CHECK(mean_photon_tmjs(cfg) == Approx(SqueezeParam(0.8, 0).nbar()).margin(1e-13));
    }
    SECTION("antisymmetric trench remains bright") {
        JanusConfig cfg{SqueezeParam(0.8, pi), SqueezeParam(0.8, 0.0), w2, w2, pi};
        CHECK(mean_photon_tmjs(cfg) > 0.0);
    }
    SECTION("oracle agreement") {
        Rng rng(31);
        for (int t = 0; t < 10; ++t) {
            JanusConfig cfg = random_config(rng);
            double n;
            try {
                n = janus_norm(cfg);
            } catch (const degenerate_superposition&) {
                continue;
            }
            if (n < 1e-10) continue;
            auto v = build_tmjs_vector(cfg, 160);
            CHECK(mean_photon_tmjs(cfg) ==
                  Approx(factorial_moment_single(v, 1)).margin(1e-9).epsilon(1e-9));
        }
    }
}

TEST_CASE("single-mode coherence of the superposition", "[tmjs]") {
    SECTION("single branch recovers the thermal k!") {
        JanusConfig cfg{SqueezeParam(0.9, 0.7), SqueezeParam(0.1, 0.0), 1.0, 0.0, 0.4};
        for (int k = 1; k <= 4; ++k)
            CHECK(g_single_tmjs(cfg, k) == Approx(factorial(k)).epsilon(1e-12));
    }
    SECTION("aligned branches are flat in delta at k!") {
        for (int i = 0; i < 17; ++i) {
            double delta = 2 * pi * i / 16.0;
            JanusConfig cfg{SqueezeParam(0.8, 0.0), SqueezeParam(0.8, 0.0), w2, w2, delta};
            try {
                CHECK(g_single_tmjs(cfg, 2) == Approx(2.0).margin(1e-9));
            } catch (const degenerate_superposition&) {
                CHECK(std::abs(delta - pi) < 1e-12);  // only the exact cancellation point
            }
        }
    }
    SECTION("antisymmetric point agrees with the oracle") {
        JanusConfig cfg{SqueezeParam(0.8, pi), SqueezeParam(0.8, 0.0), w2, w2, pi};
        auto v = build_tmjs_vector(cfg, 160);
        double mean = factorial_moment_single(v, 1);
        double oracle = factorial_moment_single(v, 2) / (mean * mean);
        CHECK(g_single_tmjs(cfg, 2) == Approx(oracle).epsilon(1e-7));
    }
}

TEST_CASE("cross-mode coherence of the superposition", "[tmjs]") {
    SECTION("single branch recovers P_k(x)/x^2k") {
        JanusConfig cfg{SqueezeParam(0.6, 1.3), SqueezeParam(0.3, 0.0), 1.0, 0.0, 0.0};
        for (int k = 1; k <= 4; ++k)
            CHECK(g_cross_tmjs(cfg, k) == Approx(g_cross_tmss(k, cfg.xi)).epsilon(1e-12));
    }
    SECTION("antisymmetric interference suppresses by orders of magnitude") {
        JanusConfig cfg{SqueezeParam(0.1, pi), SqueezeParam(0.1, 0.0), w2, w2, pi};
        double suppressed = g_cross_tmjs(cfg, 2);
        double baseline = g_cross_tmss(2, SqueezeParam(0.1, 0.0));
        CHECK(suppressed < 1e-2 * baseline);
        auto v = build_tmjs_vector(cfg, 160);
        double mean = factorial_moment_single(v, 1);
        CHECK(suppressed ==
              Approx(factorial_moment_cross(v, 2) / std::pow(mean, 4)).epsilon(1e-6));
    }
    SECTION("oracle agreement at k=1") {
        Rng rng(99);
        for (int t = 0; t < 10; ++t) {
            JanusConfig cfg = random_config(rng);
            double n;
            try {
                n = janus_norm(cfg);
            } catch (const degenerate_superposition&) {
                continue;
            }
            if (n < 1e-10) continue;
            auto v = build_tmjs_vector(cfg, 160);
            double mean = factorial_moment_single(v, 1);
            double oracle = factorial_moment_cross(v, 1) / (mean * mean);
            CHECK(g_cross_tmjs(cfg, 1) == Approx(oracle).epsilon(1e-7));
        }
    }
}

TEST_CASE("bilinear rule against the oracle across orders", "[tmjs]") {
    Rng rng(20250811);
    int tested = 0;
    for (int t = 0; t < 20; ++t) {
        JanusConfig cfg = random_config(rng);
        double n;
        try {
            n = janus_norm(cfg);
        } catch (const degenerate_superposition&) {
            continue;
        }
        if (n < 1e-10) continue;
        ++tested;
        auto v = build_tmjs_vector(cfg, 160);
        double mean = factorial_moment_single(v, 1);
        for (int k = 1; k <= 4; ++k) {
            double gs = factorial_moment_single(v, k) / std::pow(mean, k);
            double gc = factorial_moment_cross(v, k) / std::pow(mean, 2 * k);
            CHECK(g_single_tmjs(cfg, k) == Approx(gs).epsilon(1e-7));
            CHECK(g_cross_tmjs(cfg, k) == Approx(gc).epsilon(1e-7));
        }
    }
    CHECK(tested >= 15);
}

TEST_CASE("phase periodicity and joint phase shifts", "[tmjs]") {
    Rng rng(5);
    for (int t = 0; t < 5; ++t) {
        JanusConfig cfg = random_config(rng);
        try {
            double base = g_cross_tmjs(cfg, 2);

            JanusConfig shifted = cfg;
            shifted.delta += 2 * pi;
            CHECK(g_cross_tmjs(shifted, 2) == Approx(base).epsilon(1e-12));

            // only theta - phi enters z: a common offset changes nothing
            double c = rng.uniform(0.0, 2 * pi);
            JanusConfig joint{SqueezeParam(cfg.xi.r(), cfg.xi.theta() + c),
                              SqueezeParam(cfg.zeta.r(), cfg.zeta.theta() + c), cfg.chi, cfg.eta,
                              cfg.delta};
            CHECK(g_cross_tmjs(joint, 2) == Approx(base).epsilon(1e-10));
            CHECK(g_single_tmjs(joint, 3) == Approx(g_single_tmjs(cfg, 3)).epsilon(1e-10));
        } catch (const degenerate_superposition&) {
            continue;
        }
    }
}

TEST_CASE("antisymmetric setting always suppresses the baseline", "[tmjs]") {
    for (int k = 1; k <= 4; ++k)
        for (double r = 0.05; r <= 0.5 + 1e-9; r += 0.05) {
            JanusConfig cfg{SqueezeParam(r, pi), SqueezeParam(r, 0.0), w2, w2, pi};
            CHECK(g_cross_tmjs(cfg, k) < g_cross_tmss(k, SqueezeParam(r, 0.0)));
        }
}

TEST_CASE("vanishing second weight recovers the single-state limit", "[tmjs]") {
    JanusConfig base{SqueezeParam(0.7, 0.3), SqueezeParam(0.5, 1.0), 1.0, 0.0, 1.2};
    JanusConfig perturbed = base;
    perturbed.eta = 1e-6;
    for (int k = 1; k <= 3; ++k) {
        double g0 = g_cross_tmjs(base, k);
        double ge = g_cross_tmjs(perturbed, k);
        CHECK(std::abs(ge - g0) / g0 < 1e-3);
        CHECK(g0 == Approx(g_cross_tmss(k, base.xi)).epsilon(1e-12));
    }
}

TEST_CASE("mean photon underflow is reported", "[tmjs]") {
    JanusConfig vac{SqueezeParam(0.0, 0.0), SqueezeParam(0.0, 0.0), w2, w2, 0.0};
    CHECK_THROWS_AS(g_single_tmjs(vac, 2), mean_photon_underflow);
    CHECK_THROWS_AS(g_cross_tmjs(vac, 1), mean_photon_underflow);
}

TEST_CASE("normalized and unnormalized conventions", "[tmjs]") {
    // N = 1 for a single unit-weight branch: conventions coincide
    JanusConfig single{SqueezeParam(0.8, 0.0), SqueezeParam(0.1, 0.0), 1.0, 0.0, 0.0};
    CHECK(g_cross_tmjs(single, 2, Normalization::unnormalized) ==
          Approx(g_cross_tmjs(single, 2)).epsilon(1e-13));

    // N != 1: the conventions differ by N^(2k-1) in the cross coherence
    JanusConfig mixed{SqueezeParam(0.7, 0.8), SqueezeParam(0.5, 0.0), w2, w2, 0.7};
    double n = janus_norm(mixed);
    double normalized = g_cross_tmjs(mixed, 2);
    double raw = g_cross_tmjs(mixed, 2, Normalization::unnormalized);
    CHECK(raw == Approx(normalized * std::pow(n, 3)).epsilon(1e-10));
}

TEST_CASE("steering phase selection", "[tmjs]") {
    SECTION("real positive kernel steers to pi") {
        JanusConfig cfg{SqueezeParam(0.6, 0.0), SqueezeParam(0.5, 0.0), w2, w2, 0.0};
        auto s = steering_phase(cfg, 2, CoherenceKind::cross_mode);
        CHECK(s.phi_k == Approx(0.0).margin(1e-14));
        CHECK(s.delta_constructive == Approx(0.0).margin(1e-14));
        CHECK(s.delta_destructive == Approx(pi).margin(1e-14));
    }
    SECTION("zero overlap has no steering phase") {
        JanusConfig cfg{SqueezeParam(0.6, 0.0), SqueezeParam(0.0, 0.0), w2, w2, 0.0};
        CHECK_THROWS_AS(steering_phase(cfg, 1, CoherenceKind::cross_mode), zero_kernel);
    }
    SECTION("returned phase minimizes the interference term on a scan") {
        JanusConfig cfg{SqueezeParam(0.6, pi / 2), SqueezeParam(0.6, 0.0), w2, w2, 0.0};
        auto s = steering_phase(cfg, 2, CoherenceKind::cross_mode);
        auto kern = kernel_cross(cfg, 2);
        const int npts = 720;
        int best = 0;
        double best_val = std::numeric_limits<double>::infinity();
        for (int i = 0; i < npts; ++i) {
            double delta = 2 * pi * i / npts;
            double term = 2 * w2 * w2 * kern.magnitude * std::cos(kern.phase - delta);
            if (term < best_val) {
                best_val = term;
                best = i;
            }
        }
        double step = 2 * pi / npts;
        double diff = std::abs(mod_2pi(best * step - s.delta_destructive + pi) - pi);
        CHECK(diff <= step);
    }
}

TEST_CASE("moment bundle consistency", "[tmjs]") {
    JanusConfig cfg{SqueezeParam(0.8, 0.4), SqueezeParam(0.6, 0.0), 0.8, 0.6, 1.1};
    auto m = compute_tmjs_moments(cfg, 4);
    CHECK(m.norm == Approx(janus_norm(cfg)));
    CHECK(m.g_single[1] == Approx(1.0).margin(1e-12));
    CHECK(m.moment_single[1] == Approx(m.mean_photon).margin(1e-13));
    for (int k = 1; k <= 4; ++k) {
        CHECK(m.g_single[static_cast<size_t>(k)] == Approx(g_single_tmjs(cfg, k)));
        CHECK(m.g_cross[static_cast<size_t>(k)] == Approx(g_cross_tmjs(cfg, k)));
    }
}
