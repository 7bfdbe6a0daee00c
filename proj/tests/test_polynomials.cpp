#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "janus/polynomials.hpp"

using namespace janus;
using Catch::Approx;

namespace {

// independent Pascal triangle, used instead of the library's binomials
long long binom_ref(int n, int k) {
    std::vector<std::vector<long long>> tri(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        tri[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            tri[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                tri[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                tri[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    }
    return tri[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

}  // namespace

TEST_CASE("printed coefficient tables k=1..4", "[polynomials]") {
    // P1 = x(1+x), P2 = 4x^2(1+4x+x^2), P3 = 36x^3(1+9x+9x^2+x^3),
    // P4 = 576x^4(1+16x+36x^2+16x^3+x^4)
    auto p1 = squeezing_polynomial(1);
    CHECK(p1.scale == 1);
    CHECK(p1.inner == std::vector<long long>{1, 1});

    auto p2 = squeezing_polynomial(2);
    CHECK(p2.scale == 4);
    CHECK(p2.inner == std::vector<long long>{1, 4, 1});

    auto p3 = squeezing_polynomial(3);
    CHECK(p3.scale == 36);
    CHECK(p3.inner == std::vector<long long>{1, 9, 9, 1});

    auto p4 = squeezing_polynomial(4);
    CHECK(p4.scale == 576);
    CHECK(p4.inner == std::vector<long long>{1, 16, 36, 16, 1});
}

TEST_CASE("coefficient invariants up to k_max", "[polynomials]") {
    for (int k = 0; k <= polynomial_k_max; ++k) {
        auto p = squeezing_polynomial(k);
        REQUIRE(p.inner.size() == static_cast<size_t>(k) + 1);  // degree 2k overall
        CHECK(p.inner.front() == 1);
        CHECK(p.inner.back() == 1);

        long long fact = 1;
        for (int j = 2; j <= k; ++j) fact *= j;
        CHECK(p.scale == fact * fact);

        long long sum = 0;
        for (size_t j = 0; j < p.inner.size(); ++j) {
            sum += p.inner[j];
            CHECK(p.inner[j] == p.inner[p.inner.size() - 1 - j]);  // palindrome
            CHECK(p.inner[j] == binom_ref(k, static_cast<int>(j)) * binom_ref(k, static_cast<int>(j)));
        }
        CHECK(sum == binom_ref(2 * k, k));  // Vandermonde
    }
}

TEST_CASE("order out of range is rejected", "[polynomials]") {
    CHECK_THROWS_AS(squeezing_polynomial(-1), std::out_of_range);
    CHECK_THROWS_AS(squeezing_polynomial(polynomial_k_max + 1), std::out_of_range);
}

TEST_CASE("F_k evaluation", "[polynomials]") {
    for (double x : {0.0, 0.3, 0.9}) CHECK(eval_Fk(0, x) == Approx(1.0).margin(1e-15));
    CHECK(eval_Fk(1, 0.25) == Approx(5.0 / 9.0).margin(1e-15));
    // P2(0.5)/(0.5)^4 = 3.25/0.0625
    CHECK(eval_Fk(2, 0.5) == Approx(52.0).margin(1e-12));
    CHECK_THROWS_AS(eval_Fk(1, 1.0), std::domain_error);
    CHECK_THROWS_AS(eval_Fk(1, -0.1), std::domain_error);
}

TEST_CASE("terminating 2F1", "[polynomials]") {
    CHECK(eval_2f1_terminating(2, 1.0) == 6.0);  // C(4,2), integer exact
    for (int k = 0; k <= 8; ++k) CHECK(eval_2f1_terminating(k, 0.0) == 1.0);
    // Euler transform equality
    CHECK(eval_2f1_terminating(3, 0.3) ==
          Approx(eval_2f1_euler_transformed(3, 0.3)).margin(1e-12));
    CHECK_THROWS_AS(eval_2f1_terminating(-1, 0.5), std::invalid_argument);
}

TEST_CASE("Legendre recurrence route", "[polynomials]") {
    // k=1, x=0.5: 1*0.5*0.5*LegendreP_1(3) = 0.75 = P_1(0.5)
    CHECK(squeezing_polynomial(1).eval(0.5) == Approx(0.75).margin(1e-15));
    CHECK(legendre_cross_check(1, 0.5) < 1e-12);
    CHECK(legendre_cross_check(0, 0.5) == 0.0);
    CHECK(legendre_cross_check(4, 0.7) < 1e-10);
    CHECK_THROWS_AS(legendre_cross_check(2, 0.9995), std::domain_error);
    CHECK_THROWS_AS(legendre_cross_check(2, 0.0), std::domain_error);
}

TEST_CASE("small-x asymptotics P_k ~ (k!)^2 x^k", "[polynomials]") {
    for (int k = 1; k <= 6; ++k) {
        auto p = squeezing_polynomial(k);
        for (double x : {1e-6, 1e-5, 1e-4}) {
            double lead = static_cast<double>(p.scale);
            for (int j = 0; j < k; ++j) lead *= x;
            CHECK(std::abs(p.eval(x) / lead - 1.0) <= 20.0 * k * x);
        }
    }
}

TEST_CASE("F_k strictly increasing in x", "[polynomials]") {
    for (int k = 1; k <= 4; ++k) {
        double prev = eval_Fk(k, 0.02);
        for (double x = 0.07; x < 0.95; x += 0.05) {
            double cur = eval_Fk(k, x);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("three representations agree", "[polynomials]") {
    for (int k = 0; k <= 8; ++k) {
        auto p = squeezing_polynomial(k);
        for (double x = 0.1; x < 0.95; x += 0.1) {
            double xk = 1.0;
            for (int j = 0; j < k; ++j) xk *= x;
            double direct = p.eval(x);
            double hyp = static_cast<double>(p.scale) * xk * eval_2f1_terminating(k, x);
            double euler = static_cast<double>(p.scale) * xk * eval_2f1_euler_transformed(k, x);
            CHECK(std::abs(hyp - direct) / direct < 1e-10);
            CHECK(std::abs(euler - direct) / direct < 1e-10);
            CHECK(legendre_cross_check(k, x) < 1e-10);
        }
    }
}
