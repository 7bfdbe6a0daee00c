// Squeezing polynomials P_k and the unnormalized cross-mode moment
// F_k(x) = P_k(x)/(1-x)^{2k}, with three equivalent representations kept as
// mutual cross-checks:
//
//   P_k(x) = (k!)^2 x^k sum_j C(k,j)^2 x^j            (exact integer table)
//          = (k!)^2 x^k 2F1(-k,-k;1;x)                (terminating series)
//          = (k!)^2 x^k (1-x)^k LegendreP_k((1+x)/(1-x))
//
// The inner coefficients C(k,j)^2 are palindromic and sum to C(2k,k).
#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "janus/core.hpp"

namespace janus {

inline constexpr int polynomial_k_max = 12;

namespace detail {

// Exact binomial row C(k,0..k); values fit in long long for k <= 2*polynomial_k_max.
inline std::vector<long long> binomial_row(int k) {
    std::vector<long long> row(static_cast<size_t>(k) + 1, 1);
    for (int j = 1; j <= k; ++j)
        row[static_cast<size_t>(j)] = row[j - 1] * (k - j + 1) / j;
    return row;
}

inline long long factorial_ll(int k) {
    long long f = 1;
    for (int j = 2; j <= k; ++j) f *= j;
    return f;
}

}  // namespace detail

// Exact coefficients of P_k: scale = (k!)^2 and the inner polynomial
// sum_j inner[j] x^j with inner[j] = C(k,j)^2.
struct SqueezingPolynomial {
    int k = 0;
    long long scale = 1;
    std::vector<long long> inner;

    // Horner evaluation of the inner polynomial.
    double eval_inner(double x) const {
        double acc = 0.0;
        for (size_t j = inner.size(); j-- > 0;)
            acc = acc * x + static_cast<double>(inner[j]);
        return acc;
    }
    cxd eval_inner(cxd z) const {
        cxd acc = 0.0;
        for (size_t j = inner.size(); j-- > 0;)
            acc = acc * z + static_cast<double>(inner[j]);
        return acc;
    }

    double eval(double x) const {
        double xk = 1.0;
        for (int j = 0; j < k; ++j) xk *= x;
        return static_cast<double>(scale) * xk * eval_inner(x);
    }
    cxd eval(cxd z) const {
        cxd zk = 1.0;
        for (int j = 0; j < k; ++j) zk *= z;
        return static_cast<double>(scale) * zk * eval_inner(z);
    }
};

// Exact integer coefficient table of P_k, 0 <= k <= polynomial_k_max.
inline SqueezingPolynomial squeezing_polynomial(int k) {
    if (k < 0 || k > polynomial_k_max)
        throw std::out_of_range("squeezing_polynomial: order must be in [0, 12]");
    SqueezingPolynomial p;
    p.k = k;
    long long f = detail::factorial_ll(k);
    p.scale = f * f;
    auto binom = detail::binomial_row(k);
    p.inner.resize(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
        p.inner[static_cast<size_t>(j)] = binom[static_cast<size_t>(j)] * binom[static_cast<size_t>(j)];
    return p;
}

// F_k(x) = P_k(x)/(1-x)^{2k} on x in [0,1).
inline double eval_Fk(int k, double x) {
    if (!(x >= 0.0 && x < 1.0))
        throw std::domain_error("eval_Fk: x must be in [0, 1)");
    auto p = squeezing_polynomial(k);
    double denom = 1.0;
    double om = 1.0 - x;
    for (int j = 0; j < 2 * k; ++j) denom *= om;
    return p.eval(x) / denom;
}

// Terminating hypergeometric 2F1(-k,-k;1;x) = sum_j C(k,j)^2 x^j for any k >= 0.
// Binomials are built multiplicatively (multiply before divide keeps every
// intermediate an exact integer in double up to k ~ 26).
inline double eval_2f1_terminating(int k, double x) {
    if (k < 0) throw std::invalid_argument("eval_2f1_terminating: k must be >= 0");
    double sum = 1.0;
    double binom = 1.0;
    double xj = 1.0;
    for (int j = 1; j <= k; ++j) {
        binom *= static_cast<double>(k - j + 1);
        binom /= static_cast<double>(j);
        xj *= x;
        sum += binom * binom * xj;
    }
    return sum;
}

// Euler-transformed route to the same terminating series:
//   2F1(-k,-k;1;x) = (1-x)^k 2F1(-k, k+1; 1; -x/(1-x)).
// Evaluates the right-hand side (finite sum via Pochhammer ratios).
inline double eval_2f1_euler_transformed(int k, double x) {
    if (k < 0) throw std::invalid_argument("eval_2f1_euler_transformed: k must be >= 0");
    if (!(x >= 0.0 && x < 1.0))
        throw std::domain_error("eval_2f1_euler_transformed: x must be in [0, 1)");
    const double w = -x / (1.0 - x);
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < k; ++j) {
        term *= static_cast<double>(-k + j) * static_cast<double>(k + 1 + j) /
                (static_cast<double>(1 + j) * static_cast<double>(j + 1)) * w;
        sum += term;
    }
    double pre = 1.0;
    for (int j = 0; j < k; ++j) pre *= (1.0 - x);
    return pre * sum;
}

// Evaluate P_k through the Legendre relation
//   (k!)^2 x^k (1-x)^k LegendreP_k((1+x)/(1-x))
// by upward three-term recurrence (stable for argument > 1) and return the
// relative deviation from the coefficient-table evaluation.
inline double legendre_cross_check(int k, double x) {
    if (!(x > 0.0 && x <= 0.999))
        throw std::domain_error("legendre_cross_check: x must be in (0, 0.999]");
    auto p = squeezing_polynomial(k);

    double t = (1.0 + x) / (1.0 - x);
    double pm1 = 1.0;  // P_0
    double pn = t;     // P_1
    if (k == 0) pn = 1.0;
    for (int n = 1; n < k; ++n) {
        double pnext = ((2.0 * n + 1.0) * t * pn - n * pm1) / (n + 1.0);
        pm1 = pn;
        pn = pnext;
    }

    double pre = static_cast<double>(p.scale);
    for (int j = 0; j < k; ++j) pre *= x * (1.0 - x);
    double via_legendre = pre * pn;
    double direct = p.eval(x);
    return std::abs(via_legendre - direct) / std::abs(direct);
}

// k! as a double (exact for k <= 18).
inline double factorial(int k) {
    if (k < 0) throw std::invalid_argument("factorial: k must be >= 0");
    double f = 1.0;
    for (int j = 2; j <= k; ++j) f *= j;
    return f;
}

}  // namespace janus
