// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0

#include "gwm/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "gwm/errors.hpp"

namespace gwm {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kLnPi = 1.14472988584940017414;
constexpr double kHalfLn2Pi = 0.91893853320467274178;  // ln(2 pi)/2
constexpr double kEps = 2.220446049250313e-16;

// B_2, B_4, ..., B_60: exact rationals rounded to double.
constexpr std::array<double, 30> kBernoulliEven = {
    1.6666666666666666667e-01,   // B_2  = 1/6
    -3.3333333333333333333e-02,  // B_4  = -1/30
    2.3809523809523809524e-02,   // B_6  = 1/42
    -3.3333333333333333333e-02,  // B_8  = -1/30
    7.5757575757575757576e-02,   // B_10 = 5/66
    -2.5311355311355311355e-01,  // B_12 = -691/2730
    1.1666666666666666667e+00,   // B_14 = 7/6
    -7.0921568627450980392e+00,  // B_16 = -3617/510
    5.4971177944862155388e+01,   // B_18 = 43867/798
    -5.2912424242424242424e+02,  // B_20
    6.1921231884057971014e+03,   // B_22
    -8.6580253113553113553e+04,  // B_24
    1.4255171666666666667e+06,   // B_26
    -2.7298231067816091954e+07,  // B_28
    6.0158087390064236838e+08,   // B_30
    -1.5116315767092156863e+10,  // B_32
    4.2961464306116666667e+11,   // B_34
    -1.3711655205088332772e+13,  // B_36
    4.8833231897359316667e+14,   // B_38
    -1.9296579341940068149e+16,  // B_40
    8.4169304757368261500e+17,   // B_42
    -4.0338071854059455413e+19,  // B_44
    2.1150748638081991606e+21,   // B_46
    -1.2086626522296525935e+23,  // B_48
    7.5008667460769643669e+24,   // B_50
    -5.0387781014810689141e+26,  // B_52
    3.6528776484818123335e+28,   // B_54
    -2.8498769302450882226e+30,  // B_56
    2.3865427499683627645e+32,   // B_58
    -2.1399949257225333665e+34,  // B_60
};

const std::array<double, 30>& bernoulli_over_factorial_table() {
    static const std::array<double, 30> table = [] {
        std::array<double, 30> t{};
        double fact = 1.0;
        for (int j = 1; j <= 30; ++j) {
            fact *= (2.0 * j - 1.0) * (2.0 * j);
            t[j - 1] = kBernoulliEven[j - 1] / fact;
        }
        return t;
    }();
    return table;
}

double sign_of(double x) { return std::signbit(x) ? -1.0 : 1.0; }

// sin(pi s / 2), argument reduced mod 4 so half-integer s stays accurate.
double sin_pi_half(double s) {
    double r = std::fmod(s, 4.0);
    return std::sin(0.5 * kPi * r);
}

// Accelerated alternating series for zeta, s > 0, s != 1:
//   eta(s) = sum_{k>=0} (-1)^k (k+1)^{-s},  zeta(s) = eta(s)/(1 - 2^{1-s}).
// Chebyshev acceleration (Cohen, Rodriguez Villegas, Zagier); n terms give
// an error of order (3 + sqrt 8)^{-n} for totally monotone coefficients,
// which (k+1)^{-s} is for s > 0.
SeriesEval eta_zeta(double s, const Precision& prec) {
    const double rho = 3.0 + 2.0 * std::sqrt(2.0);
    const double denom = -std::expm1((1.0 - s) * kLn2);  // 1 - 2^{1-s}
    const double tol = std::max(prec.target_abs_tol, 1e-15);
    const double need =
        std::log(4.0 / (tol * std::max(std::abs(denom), 1e-3))) / std::log(rho);
    const auto n_req = static_cast<std::int64_t>(std::ceil(std::max(need, 16.0)));
    const auto n = std::min<std::int64_t>({n_req, 72, prec.max_terms});

    double d = std::pow(rho, static_cast<double>(n));
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    double sum = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::pow(static_cast<double>(k + 1), -s);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1));
    }
    const double value = sum / d / denom;
    const double trunc = 4.0 * std::pow(rho, -static_cast<double>(n));
    const double bound =
        (trunc + 2.0 * kEps * static_cast<double>(n)) / std::abs(denom) +
        4.0 * kEps * std::abs(value);
    if (bound > prec.target_abs_tol && n < std::min<std::int64_t>(n_req, 72)) {
        throw ToleranceNotMet("riemann_zeta: max_terms exhausted at s = " +
                              std::to_string(s));
    }
    return {value, n, bound};
}

bool is_negative_even_integer(double s) {
    return s < 0.0 && s == std::floor(s) &&
           std::fmod(s, 2.0) == 0.0;
}

}  // namespace

double bernoulli_number(int k) {
    if (k < 2 || k > 40 || k % 2 != 0) {
        throw DomainError("bernoulli_number: k must be even, 2 <= k <= 40");
    }
    return kBernoulliEven[k / 2 - 1];
}

double bernoulli_poly(int k, double t) {
    if (k < 0 || k > 40) {
        throw DomainError("bernoulli_poly: k must satisfy 0 <= k <= 40");
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("bernoulli_poly: t must lie in [0, 1]");
    }
    // B_k(t) = sum_j C(k,j) B_j t^{k-j}; odd B_j vanish except B_1 = -1/2.
    double sum = 0.0;
    double binom = 1.0;  // C(k, 0), updated exactly (k <= 40 keeps it integral)
    for (int j = 0; j <= k; ++j) {
        double bj;
        if (j == 0) {
            bj = 1.0;
        } else if (j == 1) {
            bj = -0.5;
        } else if (j % 2 == 1) {
            bj = 0.0;
        } else {
            bj = kBernoulliEven[j / 2 - 1];
        }
        if (bj != 0.0) {
            sum += binom * bj * std::pow(t, static_cast<double>(k - j));
        }
        binom = binom * (k - j) / (j + 1);
    }
    return sum;
}

double log_gamma(double s) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw DomainError("log_gamma: argument must be positive and finite");
    }
    if (s == 1.0 || s == 2.0) return 0.0;
    // Shift to x >= 12, then Stirling:
    //   ln Gamma(x) = (x - 1/2) ln x - x + ln(2 pi)/2
    //                 + sum_j B_{2j} / (2j (2j-1) x^{2j-1}).
    double shift = 0.0;
    double x = s;
    while (x < 12.0) {
        shift += std::log(x);
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    double corr = 0.0;
    double p = 1.0 / x;  // x^{-(2j-1)}
    for (int j = 1; j <= 8; ++j) {
        corr += kBernoulliEven[j - 1] / ((2.0 * j) * (2.0 * j - 1.0)) * p;
        p *= inv2;
    }
    return (x - 0.5) * std::log(x) - x + kHalfLn2Pi + corr - shift;
}

double std_normal_cdf(double a) {
    if (!std::isfinite(a)) {
        throw DomainError("std_normal_cdf: argument must be finite");
    }
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    return 0.5 * std::erfc(-a * kInvSqrt2);
}

double std_normal_pdf(double a) {
    constexpr double kInvSqrt2Pi = 0.39894228040143267794;
    return kInvSqrt2Pi * std::exp(-0.5 * a * a);
}

SeriesEval riemann_zeta(double s, const Precision& prec) {
    validate(prec);
    if (!std::isfinite(s)) {
        throw DomainError("riemann_zeta: s must be finite");
    }
    if (std::abs(s - 1.0) < 1e-12) {
        throw PoleAtOne("riemann_zeta: pole at s = 1");
    }
    if (s >= 0.5) return eta_zeta(s, prec);
    if (s == 0.0) return {-0.5, 1, 0.0};
    if (is_negative_even_integer(s)) return {0.0, 1, 0.0};  // trivial zeros

    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s), log space.
    const SeriesEval z = eta_zeta(1.0 - s, prec);
    const double sv = sin_pi_half(s);
    const double logmag = s * kLn2 + (s - 1.0) * kLnPi + log_gamma(1.0 - s) +
                          std::log(std::abs(z.value)) + std::log(std::abs(sv));
    const double value = sign_of(sv) * sign_of(z.value) * std::exp(logmag);
    const double rel = z.tail_bound / std::abs(z.value) +
                       (std::abs(logmag) + 4.0) * kEps;
    return {value, z.terms_used + 1, std::abs(value) * rel};
}

SeriesEval hurwitz_zeta(double s, double v, const Precision& prec) {
    validate(prec);
    if (!std::isfinite(s) || !std::isfinite(v)) {
        throw DomainError("hurwitz_zeta: arguments must be finite");
    }
    if (!(v > 0.0)) {
        throw DomainError("hurwitz_zeta: v must be positive");
    }
    if (std::abs(s - 1.0) < 1e-12) {
        throw PoleAtOne("hurwitz_zeta: pole at s = 1");
    }
    if (s <= -55.0) {
        // Euler-Maclaurin order would exceed the Bernoulli table; only the
        // Riemann case has a reflection route.
        if (v == 1.0) return riemann_zeta(s, prec);
        throw DomainError("hurwitz_zeta: s too negative for v != 1");
    }

    const double tol = prec.target_abs_tol;
    const int m = (s >= 0.0)
                      ? 8
                      : std::min(29, 10 + static_cast<int>(std::ceil(-s / 2.0)));
    const auto& bof = bernoulli_over_factorial_table();

    // Truncation bound |B_{2m+2}/(2m+2)!| |(s)_{2m+1}| (v+N)^{-s-2m-1},
    // evaluated in log space; exact zero when the rising factorial hits a
    // nonpositive-integer s.
    const auto log_trunc = [&](double N) -> double {
        double lr = 0.0;
        for (int i = 0; i <= 2 * m; ++i) {
            const double f = s + i;
            if (f == 0.0) return -std::numeric_limits<double>::infinity();
            lr += std::log(std::abs(f));
        }
        return std::log(std::abs(bof[m])) + lr +
               (-s - 2.0 * m - 1.0) * std::log(v + N);
    };

    double N = std::max(8.0, std::ceil((std::abs(s) + 2.0 * m) / (2.0 * kPi)) + 4.0);
    const double n_cap = std::min<double>(static_cast<double>(prec.max_terms), 2e6);
    while (log_trunc(N) > std::log(0.3 * tol) && N < n_cap) {
        N = std::min(n_cap, std::ceil(1.6 * N) + 8.0);
    }
    const double trunc = std::exp(log_trunc(N));
    if (!(trunc <= tol) && !(trunc <= 0.0)) {
        if (N >= n_cap) {
            throw ToleranceNotMet("hurwitz_zeta: max_terms exhausted at s = " +
                                  std::to_string(s));
        }
    }

    double head = 0.0;
    double abs_acc = 0.0;
    for (double k = 0.0; k < N; k += 1.0) {
        const double t = std::pow(v + k, -s);
        head += t;
        abs_acc += std::abs(t);
    }
    const double vN = v + N;
    const double integral = std::pow(vN, 1.0 - s) / (s - 1.0);
    const double half = 0.5 * std::pow(vN, -s);
    abs_acc += std::abs(integral) + half;

    double corr = 0.0;
    double rising = s;                          // (s)_{2j-1}
    double pw = std::pow(vN, -s - 1.0);         // (v+N)^{-s-2j+1}
    const double inv2 = 1.0 / (vN * vN);
    for (int j = 1; j <= m; ++j) {
        const double t = bof[j - 1] * rising * pw;
        corr += t;
        abs_acc += std::abs(t);
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        pw *= inv2;
    }

    const double value = head + integral + half + corr;
    const double bound = trunc + 4.0 * kEps * abs_acc;
    return {value, static_cast<std::int64_t>(N) + m, bound};
}

SeriesEval lerch_phi_direct(double z, double s, double v,
                            const Precision& prec) {
    validate(prec);
    if (!(z > 0.0 && z <= 1.0) || !(v > 0.0) || !std::isfinite(v) ||
        !std::isfinite(s)) {
        throw DomainError("lerch_phi: need 0 < z <= 1, v > 0, finite s");
    }
    if (z == 1.0) {
        if (!(s > 1.0)) {
            throw DomainError("lerch_phi_direct: series diverges at z = 1, s <= 1");
        }
        // Tail bounded by the integral of (v+x)^{-s}.
        double sum = 0.0;
        double n = 0.0;
        for (; n < static_cast<double>(prec.max_terms); n += 1.0) {
            sum += std::pow(v + n, -s);
            const double tail = std::pow(v + n + 1.0, 1.0 - s) / (s - 1.0);
            if (tail <= prec.target_abs_tol) {
                return {sum, static_cast<std::int64_t>(n) + 1, tail};
            }
        }
        throw ToleranceNotMet("lerch_phi_direct: max_terms exhausted at z = 1");
    }
    double sum = 0.0;
    double zpow = 1.0;
    for (std::int64_t n = 0; n < prec.max_terms; ++n) {
        const double t = std::pow(v + n, -s) * zpow;
        sum += t;
        zpow *= z;
        // Geometric envelope: term ratio <= z * ((v+n+1)/(v+n))^{-s}.
        const double grow =
            (s >= 0.0) ? 1.0 : std::pow((v + n + 1.0) / (v + n), -s);
        const double rho = z * grow;
        if (rho < 1.0) {
            const double tail = std::abs(t) * rho / (1.0 - rho);
            if (tail <= prec.target_abs_tol) {
                return {sum, n + 1, tail};
            }
        }
    }
    throw ToleranceNotMet("lerch_phi_direct: max_terms exhausted");
}

SeriesEval lerch_phi_bateman(double z, double s, double v,
                             const Precision& prec) {
    validate(prec);
    if (!(z > 0.0 && z <= 1.0) || !(v > 0.0) || !std::isfinite(v) ||
        !std::isfinite(s)) {
        throw DomainError("lerch_phi: need 0 < z <= 1, v > 0, finite s");
    }
    if (z == 1.0) return hurwitz_zeta(s, v, prec);
    const double L = std::log(z);  // < 0
    if (std::abs(L) >= 2.0 * kPi) {
        throw BatemanInvalid("lerch_phi_bateman: |ln z| >= 2 pi");
    }
    const double sr = std::round(s);
    if (sr >= 1.0 && std::abs(s - sr) < 1e-12) {
        throw BatemanInvalid("lerch_phi_bateman: s is a positive integer");
    }

    // Gamma(1-s) (ln 1/z)^{s-1}, assembled in log space. For s > 1 the
    // reflection Gamma(1-s) = pi / (sin(pi(1-s)) Gamma(s)) keeps log_gamma
    // on positive arguments.
    double log_lead;
    double lead_sign = 1.0;
    if (s < 1.0) {
        log_lead = log_gamma(1.0 - s);
    } else {
        const double sn = std::sin(kPi * (1.0 - s));
        log_lead = kLnPi - std::log(std::abs(sn)) - log_gamma(s);
        lead_sign = sign_of(sn);
    }
    log_lead += (s - 1.0) * std::log(-L);
    const double lead = lead_sign * std::exp(log_lead);

    // r-sum with the decay guard: stop once the term magnitude is below
    // target/10 and three consecutive terms decreased; cap at 200 terms.
    const auto cap = std::min<std::int64_t>(prec.max_terms, 200);
    const Precision sub{std::max(prec.target_abs_tol * 0.1, 1e-14),
                        prec.max_terms};
    double sum = 0.0;
    double lp = 1.0;  // L^r / r!
    double err_acc = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    int decreasing = 0;
    double last = 0.0;
    std::int64_t terms = 0;
    bool converged = false;
    for (std::int64_t r = 0; r < cap; ++r) {
        const SeriesEval hz = hurwitz_zeta(s - static_cast<double>(r), v, sub);
        const double t = hz.value * lp;
        sum += t;
        err_acc += hz.tail_bound * std::abs(lp);
        terms = r + 1;
        const double mag = std::abs(t);
        decreasing = (mag < prev) ? decreasing + 1 : 0;
        prev = mag;
        last = mag;
        lp *= L / static_cast<double>(r + 1);
        if (mag < prec.target_abs_tol * 0.1 && decreasing >= 3) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw ToleranceNotMet("lerch_phi_bateman: r-sum cap reached");
    }
    const double q = std::min(0.98, 1.25 * std::abs(L) / (2.0 * kPi));
    const double zv = std::exp(-v * L);  // z^{-v}
    const double value = zv * (lead + sum);
    const double tail = zv * (last * q / (1.0 - q) + err_acc) +
                        8.0 * kEps * std::abs(value);
    return {value, terms, tail};
}

SeriesEval lerch_phi(double z, double s, double v, const Precision& prec) {
    validate(prec);
    if (!(z > 0.0 && z <= 1.0) || !(v > 0.0) || !std::isfinite(v) ||
        !std::isfinite(s)) {
        throw DomainError("lerch_phi: need 0 < z <= 1, v > 0, finite s");
    }
    if (z == 1.0) return hurwitz_zeta(s, v, prec);
    if (z <= 0.5) return lerch_phi_direct(z, s, v, prec);
    // Estimate the direct-series cost from the geometric envelope; add the
    // polynomial growth for s < 0 in a second pass.
    const double lt = std::log(prec.target_abs_tol * (1.0 - z));
    double n_est = lt / std::log(z);
    if (s < 0.0) {
        n_est = (lt - (-s) * std::log(v + n_est + 1.0)) / std::log(z);
    }
    if (n_est <= static_cast<double>(prec.max_terms)) {
        return lerch_phi_direct(z, s, v, prec);
    }
    return lerch_phi_bateman(z, s, v, prec);
}

namespace detail {

double bernoulli_over_factorial(int j) {
    if (j < 1 || j > kMaxBernoulliPairs) {
        throw DomainError("bernoulli_over_factorial: index out of table");
    }
    return bernoulli_over_factorial_table()[j - 1];
}

}  // namespace detail
}  // namespace gwm
