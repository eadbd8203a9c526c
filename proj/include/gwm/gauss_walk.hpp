// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef GWM_GAUSS_WALK_HPP
#define GWM_GAUSS_WALK_HPP

#include <complex>
#include <string>

#include "gwm/series_eval.hpp"

namespace gwm {

/// Magnitude of the negative per-step mean of the unit-variance Gaussian
/// increments. Construction validates beta > 0 and finite.
struct Drift {
    explicit Drift(double b);
    double beta;
};

enum class Method { zeta_series, spitzer, asymptotic, extended, monte_carlo };

const char* method_name(Method m);

/// The triple (P(M=0), E M, Var M) with per-quantity diagnostics.
/// p_zero may round to 1 at working precision for large beta; j0 carries the
/// Spitzer exponent so the deficit 1 - p_zero = -expm1(-j0) stays
/// recoverable.
struct WalkStats {
    double p_zero = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    Method method = Method::zeta_series;
    SeriesEval p_zero_detail;
    SeriesEval mean_detail;
    SeriesEval variance_detail;
    double j0 = 0.0;
};

struct MomentOrder {
    explicit MomentOrder(int order);
    int k;
};

/// beta0 solving e^{-beta0^2/2} = beta0^2/(4 pi), i.e. x e^x = 2 pi with
/// x = beta^2/2: the drift at which the Spitzer and zeta series decay rates
/// cross (~1.7086, common base ~0.2323).
struct Crossover {
    double x0;
    double beta0;
    double common_value;
};

/// Bisection on [1, 2] to width 1e-12 plus two Newton polish steps.
Crossover convergence_crossover();

// --- zeta-series route (Taylor series about beta = 0, 0 < beta < 2 sqrt(pi))
SeriesEval p_zero_zeta(Drift d, const Precision& prec = {});
SeriesEval mean_zeta(Drift d, const Precision& prec = {});
SeriesEval var_zeta(Drift d, const Precision& prec = {});

// --- Spitzer route (direct summation over n, any beta > 0; slow tails for
//     small beta are delegated to the Euler-Maclaurin engine)
SeriesEval p_zero_spitzer(Drift d, const Precision& prec = {});
SeriesEval mean_spitzer(Drift d, const Precision& prec = {});
SeriesEval var_spitzer(Drift d, const Precision& prec = {});

// --- general moment sums J_k = sum_n (1/n) E((S_n^+)^k);
//     J_0 = -ln P(M=0), J_1 = E M, J_2 = Var M.
SeriesEval jk_zeta(MomentOrder k, Drift d, const Precision& prec = {});
SeriesEval jk_spitzer(MomentOrder k, Drift d, const Precision& prec = {});

/// Truncated small-beta expansions, exactly as written, no series tail:
///   E M   = 1/(2 beta) + zeta(1/2)/sqrt(2 pi) + beta/4
///   Var M = 1/(4 beta^2) - 1/4 - 2 zeta(-1/2) beta / sqrt(2 pi) - beta^2/24
///   P(M=0) from the beta-linear truncation of the zeta-series exponent.
WalkStats asymptotic_stats(Drift d);

/// S_j(b), j in {0,1,2}: the slowly converging complex sums of the
/// extended-domain route, accelerated by a dedicated Euler-Maclaurin tail.
///   S_0(b) = sqrt(pi)/sqrt(b) sum (arcsin(sqrt(b/n)) - sqrt(b/n))
///   S_1(b) = sqrt(pi)/(2b)   sum (1/n)   (sqrt(n) - sqrt(n-b))
///   S_2(b) = sqrt(pi)/(4b)   sum (1/n^2) (sqrt(n) - sqrt(n-b))
/// Principal branches throughout; intended argument is b = -i beta^2/(4 pi).
ComplexSeriesEval s_series(int j, std::complex<double> b,
                           const Precision& prec = {});

/// Zeta-series statistics with each tail replaced by its S-series
/// re-expression; valid for every beta > 0, in particular beta >= 2 sqrt(pi)
/// where the zeta-series route diverges.
WalkStats stats_extended(Drift d, const Precision& prec = {});

WalkStats stats_zeta(Drift d, const Precision& prec = {});
WalkStats stats_spitzer(Drift d, const Precision& prec = {});

/// Dispatcher: zeta series for beta <= min(0.9 * 2 sqrt(pi), 1.2 * beta0),
/// Spitzer above; the extended route is opt-in only. The returned value is
/// bit-identical to the explicitly requested route.
WalkStats stats_auto(Drift d, const Precision& prec = {});

}  // namespace gwm

#endif
