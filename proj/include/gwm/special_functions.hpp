// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef GWM_SPECIAL_FUNCTIONS_HPP
#define GWM_SPECIAL_FUNCTIONS_HPP

#include "gwm/series_eval.hpp"

namespace gwm {

/// Riemann zeta(s) for real s != 1.
///
/// s >= 1/2: accelerated alternating (eta) series,
///   zeta(s) = (1 - 2^{1-s})^{-1} sum (-1)^{n-1} n^{-s}.
/// s <  1/2: functional equation applied to a direct evaluation at 1-s,
///   zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s),
/// assembled in log space so deep negative arguments do not overflow the
/// Gamma factor. Trivial zeros (negative even integers) return exactly 0.
///
/// Throws PoleAtOne if |s - 1| < 1e-12, ToleranceNotMet if the term budget
/// is exhausted first.
SeriesEval riemann_zeta(double s, const Precision& prec = {});

/// Hurwitz zeta(s, v) = sum_{n>=0} (v+n)^{-s}, analytically continued to
/// s <= 1 by Euler-Maclaurin summation. Requires v > 0, s != 1.
///
/// The reported tail_bound includes the roundoff floor eps * sum|pieces|,
/// which grows for deeply negative s; for v == 1 and s < -55 the call is
/// delegated to riemann_zeta.
SeriesEval hurwitz_zeta(double s, double v, const Precision& prec = {});

/// Lerch transcendent Phi(z, s, v) for 0 < z <= 1, v > 0.
///
/// Dispatch: direct series when z <= 0.5 or the geometric bound z^N meets
/// the tolerance within the term budget; otherwise the Bateman expansion
///   Phi = z^{-v} [ Gamma(1-s) (ln 1/z)^{s-1}
///                  + sum_r zeta(s-r, v) (ln z)^r / r! ],
/// valid for |ln z| < 2pi and s not a positive integer. z == 1 reduces to
/// hurwitz_zeta(s, v).
SeriesEval lerch_phi(double z, double s, double v, const Precision& prec = {});

/// Direct-series strategy only (oracle counterpart of the Bateman branch).
SeriesEval lerch_phi_direct(double z, double s, double v,
                            const Precision& prec = {});

/// Bateman-expansion strategy only. Throws BatemanInvalid outside its
/// validity domain.
SeriesEval lerch_phi_bateman(double z, double s, double v,
                             const Precision& prec = {});

/// Standard normal distribution function P(a) = Phi(a).
/// Absolute error <= 1e-15; relative error <= 1e-12 for a >= -37.
double std_normal_cdf(double a);

/// Standard normal density, exp(-a^2/2)/sqrt(2 pi).
double std_normal_pdf(double a);

/// Bernoulli number B_k for even k, 2 <= k <= 40. Values are the exact
/// rationals rounded to double.
double bernoulli_number(int k);

/// Bernoulli polynomial B_k(t) for 0 <= k <= 40, t in [0, 1].
double bernoulli_poly(int k, double t);

/// ln Gamma(s) for s > 0, relative error <= 1e-13. Argument shifting plus
/// the Stirling series with Bernoulli-number coefficients.
double log_gamma(double s);

namespace detail {
/// B_{2j}/(2j)! for j = 1..kMaxBernoulliPairs (internal Euler-Maclaurin use).
double bernoulli_over_factorial(int j);
constexpr int kMaxBernoulliPairs = 30;  // up to B_60
}  // namespace detail

}  // namespace gwm

#endif
