// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: every criterion with its tolerance and runtime gate,
// one pass/fail line each. Exit code 0 iff all criteria hold.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "gwm/errors.hpp"
#include "gwm/euler_maclaurin.hpp"
#include "gwm/gauss_walk.hpp"
#include "gwm/monte_carlo.hpp"
#include "gwm/special_functions.hpp"

using namespace gwm;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.50662827463100050242;

int g_failed = 0;

struct Criterion {
    int id;
    std::string name;
    double seconds_limit;
};

void report(const Criterion& c, bool ok, double seconds,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL",
                c.id, c.name.c_str(), seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failed;
}

void run(const Criterion& c, const std::function<bool(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (secs > c.seconds_limit) {
        detail += (detail.empty() ? "" : "; ") + std::string("runtime ") +
                  std::to_string(secs) + " s over limit " +
                  std::to_string(c.seconds_limit) + " s";
        ok = false;
    }
    report(c, ok, secs, detail);
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

int main() {
    // 1. Paper constants zeta(1/2), zeta(-1/2)
    run({1, "paper zeta constants to 4 decimals", 1.0}, [](std::string& d) {
        const double zh = riemann_zeta(0.5, {1e-12, 100000}).value;
        const double zmh = riemann_zeta(-0.5, {1e-12, 100000}).value;
        char buf[128];
        std::snprintf(buf, sizeof(buf), "zeta(1/2) = %.6f, zeta(-1/2) = %.6f",
                      zh, zmh);
        d = buf;
        return close(zh, -1.4604, 5e-5) && close(zmh, -0.2079, 5e-5);
    });

    // 2. Kingman constant
    run({2, "Kingman constant 0.5826 via Euler-Maclaurin", 1.0},
        [](std::string& d) {
            const double k = kingman_constant({1e-9, 200000});
            const double ref =
                -riemann_zeta(0.5, {1e-13, 100000}).value / kSqrt2Pi;
            char buf[96];
            std::snprintf(buf, sizeof(buf), "kingman = %.8f, -zeta/sqrt = %.8f",
                          k, ref);
            d = buf;
            return close(k, 0.5826, 5e-5) && close(k, ref, 1e-6);
        });

    // 3. Crossover study
    run({3, "crossover x0, beta0, common value", 0.1}, [](std::string& d) {
        const Crossover c = convergence_crossover();
        char buf[96];
        std::snprintf(buf, sizeof(buf), "x0 = %.6f, beta0 = %.6f, cv = %.6f",
                      c.x0, c.beta0, c.common_value);
        d = buf;
        return close(c.x0, 1.4597, 5e-5) && close(c.beta0, 1.7086, 5e-5) &&
               close(c.common_value, 0.2323, 5e-5);
    });

    // 4. Route agreement suite
    run({4, "zeta vs Spitzer route agreement <= 1e-9", 30.0},
        [](std::string& d) {
            const Precision prec{1e-11, 400000};
            double worst = 0.0;
            for (double beta : {0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
                const Drift dr(beta);
                worst = std::max(worst,
                                 std::abs(p_zero_zeta(dr, prec).value -
                                          p_zero_spitzer(dr, prec).value));
                worst = std::max(worst, std::abs(mean_zeta(dr, prec).value -
                                                 mean_spitzer(dr, prec).value));
                worst = std::max(worst, std::abs(var_zeta(dr, prec).value -
                                                 var_spitzer(dr, prec).value));
            }
            char buf[64];
            std::snprintf(buf, sizeof(buf), "worst |zeta - spitzer| = %.3e",
                          worst);
            d = buf;
            return worst <= 1e-9;
        });

    // 5. Asymptotics at beta = 0.1 plus the residual-ratio law
    run({5, "asymptotic truncations and residual ratio", 10.0},
        [](std::string& d) {
            const Precision prec{1e-11, 400000};
            const Drift d01(0.1);
            const double mean_s = mean_spitzer(d01, prec).value;
            const double var_s = var_spitzer(d01, prec).value;
            const bool a = close(mean_s, 4.4424, 1e-3) &&
                           close(mean_zeta(d01, prec).value, 4.4424, 1e-3);
            const bool b = close(var_s, 24.7662, 2e-3) &&
                           close(var_zeta(d01, prec).value, 24.7662, 2e-3);
            const double target = -0.04146;
            bool c = true;
            for (double beta : {0.4, 0.2, 0.1}) {
                const Drift dr(beta);
                const double residual =
                    (mean_zeta(dr, prec).value - asymptotic_stats(dr).mean) /
                    (beta * beta);
                c = c && std::abs(residual - target) <= 0.2 * std::abs(target);
            }
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "mean = %.6f, var = %.6f (Spitzer oracle)", mean_s,
                          var_s);
            d = buf;
            return a && b && c;
        });

    // 6. J_k identities and cross-route checks
    run({6, "J_k identities (k = 0, 1, 2) and k = 3, 4 cross-route", 60.0},
        [](std::string& d) {
            const Precision prec{1e-11, 400000};
            bool ok = true;
            for (double beta : {0.5, 1.5}) {
                const Drift dr(beta);
                ok = ok && std::abs(jk_spitzer(MomentOrder(0), dr, prec).value +
                                    std::log(p_zero_spitzer(dr, prec).value)) <=
                               1e-10;
                ok = ok && std::abs(jk_zeta(MomentOrder(1), dr, prec).value -
                                    mean_zeta(dr, prec).value) <= 1e-10;
                ok = ok && std::abs(jk_zeta(MomentOrder(2), dr, prec).value -
                                    var_zeta(dr, prec).value) <= 1e-10;
            }
            double worst = 0.0;
            for (int k : {3, 4}) {
                for (double beta : {1.0, 2.0}) {
                    const Drift dr(beta);
                    worst = std::max(
                        worst, std::abs(jk_zeta(MomentOrder(k), dr, prec).value -
                                        jk_spitzer(MomentOrder(k), dr, prec)
                                            .value));
                }
            }
            char buf[64];
            std::snprintf(buf, sizeof(buf), "worst k=3,4 discrepancy = %.3e",
                          worst);
            d = buf;
            return ok && worst <= 1e-8;
        });

    // 7. Extended domain (also adjudicates the Eq. (7.9) transcription)
    run({7, "extended route overlap and beta > 2 sqrt(pi)", 30.0},
        [](std::string& d) {
            const Precision prec{1e-9, 400000};
            const Precision tight{1e-11, 400000};
            double worst = 0.0;
            for (double beta : {1.0, 2.0, 3.0}) {
                const WalkStats e = stats_extended(Drift(beta), prec);
                const WalkStats z = stats_zeta(Drift(beta), tight);
                worst = std::max({worst, std::abs(e.p_zero - z.p_zero),
                                  std::abs(e.mean - z.mean),
                                  std::abs(e.variance - z.variance)});
            }
            const WalkStats e4 = stats_extended(Drift(4.0), prec);
            const WalkStats s4 = stats_spitzer(Drift(4.0), tight);
            const double w4 = std::max({std::abs(e4.p_zero - s4.p_zero),
                                        std::abs(e4.mean - s4.mean),
                                        std::abs(e4.variance - s4.variance)});
            char buf[64];
            std::snprintf(buf, sizeof(buf), "worst overlap gap = %.3e",
                          std::max(worst, w4));
            d = buf;
            return worst <= 1e-6 && w4 <= 1e-6;
        });

    // 8. Monte Carlo concordance, 1e6 paths, fixed seed
    run({8, "Monte Carlo within 3 SE (4 SE for variance)", 120.0},
        [](std::string& d) {
            const Precision prec{1e-11, 400000};
            bool ok = true;
            std::string notes;
            for (double beta : {0.5, 3.0}) {
                McConfig cfg(Drift(beta), 20070421ULL, 1000000);
                const McEstimate e = simulate_max(cfg);
                const WalkStats w = stats_auto(Drift(beta), prec);
                const double zm = std::abs(e.mean_hat - w.mean) / e.se_mean;
                const double zp =
                    std::abs(e.p_zero_hat - w.p_zero) / e.se_pzero;
                const double zv = std::abs(e.var_hat - w.variance) / e.se_var;
                ok = ok && zm <= 3.0 && zp <= 3.0 && zv <= 4.0;
                char buf[96];
                std::snprintf(buf, sizeof(buf),
                              "beta %.1f: z(mean) %.2f z(p0) %.2f z(var) %.2f; ",
                              beta, zm, zp, zv);
                notes += buf;
                // determinism under the fixed seed
                const McEstimate e2 = simulate_max(cfg);
                ok = ok && e2.mean_hat == e.mean_hat &&
                     e2.p_zero_hat == e.p_zero_hat && e2.var_hat == e.var_hat;
            }
            d = notes;
            return ok;
        });

    // 9. Special-function property suite
    run({9, "special-function and Euler-Maclaurin property suite", 10.0},
        [](std::string& d) {
            bool ok = true;
            // reflection self-consistency at 1e-11
            for (double s : {1.5, 2.5, 3.5}) {
                const double zs = riemann_zeta(s, {1e-13, 100000}).value;
                const double z1ms =
                    riemann_zeta(1.0 - s, {1e-13, 100000}).value;
                const double fwd = std::pow(2.0, 1.0 - s) * std::tgamma(s) *
                                   zs * std::cos(0.5 * s * kPi) /
                                   std::pow(kPi, s);
                ok = ok && std::abs(fwd - z1ms) <= 1e-11;
            }
            // Lerch direct vs Bateman at 1e-11
            const double z = std::exp(-0.125);
            ok = ok && std::abs(lerch_phi_direct(z, 0.5, 1.0,
                                                 {1e-13, 2000000})
                                    .value -
                                lerch_phi_bateman(z, 0.5, 1.0,
                                                  {1e-13, 100000})
                                    .value) <= 1e-11;
            // normal CDF symmetry within 2 ulp
            for (int i = 0; i <= 2000; ++i) {
                const double a = -10.0 + 0.01 * i;
                ok = ok &&
                     std::abs(std_normal_cdf(a) + std_normal_cdf(-a) - 1.0) <=
                         2.0 * std::numeric_limits<double>::epsilon();
            }
            // Euler-Maclaurin polynomial exactness (cubic, m = 2)
            {
                EmProblem p;
                p.f = [](double x) { return ((0.5 * x - 1.0) * x + 2.0) * x; };
                p.odd_derivs = {
                    [](double x) { return 1.5 * x * x - 2.0 * x + 2.0; },
                    [](double) { return 3.0; }};
                p.integral = [](double lo, double hi) {
                    auto F = [](double x) {
                        return 0.125 * x * x * x * x - x * x * x / 3.0 +
                               x * x;
                    };
                    return F(hi) - F(lo);
                };
                p.order = 2;
                p.start = 1.0;
                p.end = 60.0;
                double direct = 0.0;
                for (int n = 1; n <= 60; ++n) direct += p.f(n);
                const SeriesEval s = em_sum(p, {1e-9, 1000});
                ok = ok && std::abs(s.value - direct) <=
                               1e-9 * std::max(1.0, std::abs(direct));
            }
            d = "";
            return ok;
        });

    std::printf("%d criterion(s) failed\n", g_failed);
    return g_failed == 0 ? 0 : 1;
}
